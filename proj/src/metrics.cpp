#include "metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ordeg {

namespace {

// BFS filling dist and parent (parent[source] = source). Buffers are reused
// across calls; queue is a plain cursor over a vector.
void bfs_into(const Graph& g, Vertex source, std::vector<std::int32_t>& dist,
              std::vector<Vertex>& parent, std::vector<Vertex>& queue) {
    const Vertex n = g.order();
    dist.assign(n, kUnreachable);
    parent.assign(n, 0);
    queue.clear();
    dist[source] = 0;
    parent[source] = source;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        std::int32_t du = dist[u];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = du + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
}

}  // namespace

std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source) {
    if (source >= g.order()) throw std::invalid_argument("bfs source " + std::to_string(source) + " out of range");
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    bfs_into(g, source, dist, parent, queue);
    return dist;
}

bool is_connected(const Graph& g) {
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    bfs_into(g, 0, dist, parent, queue);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

std::optional<std::uint32_t> diameter(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("diameter requires order >= 2");
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    std::int32_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        bfs_into(g, s, dist, parent, queue);
        for (std::int32_t d : dist) {
            if (d == kUnreachable) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return static_cast<std::uint32_t>(best);
}

Rational aspl(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("aspl requires order >= 2");
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    std::uint64_t sum = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        bfs_into(g, s, dist, parent, queue);
        for (std::int32_t d : dist) {
            if (d == kUnreachable) throw std::domain_error("aspl undefined: graph is disconnected");
            sum += static_cast<std::uint64_t>(d);
        }
    }
    std::uint64_t n = g.order();
    return Rational(sum, n * (n - 1));
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.min_degree = std::numeric_limits<Vertex>::max();
    s.max_degree = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        Vertex d = g.degree(v);
        s.min_degree = std::min(s.min_degree, d);
        s.max_degree = std::max(s.max_degree, d);
        ++s.histogram[d];
    }
    s.is_regular = s.min_degree == s.max_degree;
    return s;
}

std::optional<std::uint32_t> girth(const Graph& g) {
    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (Vertex s = 0; s < g.order(); ++s) {
        bfs_into(g, s, dist, parent, queue);
        for (Vertex u = 0; u < g.order(); ++u) {
            if (dist[u] == kUnreachable) continue;
            for (Vertex w : g.neighbors(u)) {
                if (w < u) continue;  // each edge once
                if (dist[w] == kUnreachable) continue;
                if (parent[u] == w || parent[w] == u) continue;  // tree edge
                best = std::min(best, dist[u] + dist[w] + 1);
            }
        }
    }
    if (best == std::numeric_limits<std::int32_t>::max()) return std::nullopt;
    return static_cast<std::uint32_t>(best);
}

MetricsReport compute_metrics(const Graph& g) {
    MetricsReport r;
    r.order = g.order();
    r.edge_count = g.edge_count();
    r.degrees = degree_stats(g);

    std::vector<std::int32_t> dist;
    std::vector<Vertex> parent, queue;
    bool connected = true;
    std::int32_t ecc_max = 0;
    std::uint64_t sum = 0;
    std::int32_t girth_best = std::numeric_limits<std::int32_t>::max();

    for (Vertex s = 0; s < g.order(); ++s) {
        bfs_into(g, s, dist, parent, queue);
        for (Vertex u = 0; u < g.order(); ++u) {
            std::int32_t d = dist[u];
            if (d == kUnreachable) {
                connected = false;
                continue;
            }
            ecc_max = std::max(ecc_max, d);
            sum += static_cast<std::uint64_t>(d);
            for (Vertex w : g.neighbors(u)) {
                if (w < u || dist[w] == kUnreachable) continue;
                if (parent[u] == w || parent[w] == u) continue;
                girth_best = std::min(girth_best, d + dist[w] + 1);
            }
        }
    }

    r.is_connected = connected;
    if (connected) {
        r.diameter = static_cast<std::uint32_t>(ecc_max);
        if (r.order >= 2) r.aspl = Rational(sum, r.order * (r.order - 1));
    }
    if (girth_best != std::numeric_limits<std::int32_t>::max())
        r.girth = static_cast<std::uint32_t>(girth_best);
    return r;
}

std::vector<std::int32_t> oracle_all_pairs(const Graph& g, std::uint32_t cap) {
    const std::uint64_t n = g.order();
    if (n > cap)
        throw limit_error("oracle cap exceeded: order " + std::to_string(n) + " > " + std::to_string(cap));

    constexpr std::int32_t inf = std::numeric_limits<std::int32_t>::max() / 2;
    std::vector<std::int32_t> d(n * n, inf);
    for (std::uint64_t i = 0; i < n; ++i) d[i * n + i] = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w : g.neighbors(u)) d[u * n + w] = 1;

    // Relax until stable; the second sweep only confirms the fixed point.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t k = 0; k < n; ++k) {
            const std::int32_t* row_k = &d[k * n];
            for (std::uint64_t i = 0; i < n; ++i) {
                std::int32_t dik = d[i * n + k];
                if (dik >= inf) continue;
                std::int32_t* row_i = &d[i * n];
                for (std::uint64_t j = 0; j < n; ++j) {
                    std::int32_t nd = dik + row_k[j];
                    if (nd < row_i[j]) {
                        row_i[j] = nd;
                        changed = true;
                    }
                }
            }
        }
    }

    for (std::int32_t& v : d)
        if (v >= inf) v = kUnreachable;
    return d;
}

}  // namespace ordeg
