#include "constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "algebra.hpp"
#include "generators.hpp"

namespace ordeg {

const std::array<std::pair<std::uint32_t, std::uint32_t>, 8> kG8Vertices = {{
    {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2},
}};

Graph g8() {
    GraphBuilder b(8);
    for (Vertex u = 0; u < 8; ++u)
        for (Vertex w = u + 1; w < 8; ++w) {
            auto [i, j] = kG8Vertices[u];
            auto [k, l] = kG8Vertices[w];
            bool adj = (i == 0 && k == 1) || (i == 1 && k == 0) || (i == 2 && k == 2);
            adj = adj || (((i == 1 && k == 2) || (i == 2 && k == 1)) && j == l);
            if (adj) b.add_edge(u, w);
        }
    return b.build();
}

const std::array<Vertex, 8>& g8_phi() {
    // (0,j) -> (0,1-j); (1,j) -> (2,j+1 mod 3); (2,j) -> (1,j-1 mod 3)
    static const std::array<Vertex, 8> phi = {1, 0, 6, 7, 5, 4, 2, 3};
    return phi;
}

const std::array<std::array<Vertex, 8>, 4>& g8_psi_tables() {
    static const std::array<std::array<Vertex, 8>, 4> psi = {{
        {0, 3, 1, 2, 6, 7, 4, 5},
        {1, 7, 2, 6, 0, 4, 5, 3},
        {2, 4, 6, 0, 1, 5, 3, 7},
        {6, 5, 0, 1, 2, 3, 7, 4},
    }};
    return psi;
}

namespace {

void validate_star_spec(const StarSpec& spec, const Graph& g2) {
    if (spec.multiplicity < 1) throw std::invalid_argument("star product: multiplicity must be at least 1");

    // Arcs must orient every base edge exactly once.
    std::vector<Edge> normalized;
    normalized.reserve(spec.arcs.size());
    for (const Edge& a : spec.arcs) {
        if (a.first >= spec.base.order() || a.second >= spec.base.order())
            throw std::invalid_argument("star product: arc endpoint out of range");
        if (a.first == a.second) throw std::invalid_argument("star product: arc is a self-loop");
        if (!spec.base.adjacent(a.first, a.second))
            throw std::invalid_argument("star product: arc (" + std::to_string(a.first) + "," +
                                        std::to_string(a.second) + ") is not a base edge");
        normalized.emplace_back(std::min(a.first, a.second), std::max(a.first, a.second));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw std::invalid_argument("star product: base edge oriented more than once");
    if (normalized != spec.base.edges())
        throw std::invalid_argument("star product: arcs do not cover every base edge");

    if (spec.tables.size() != spec.arcs.size())
        throw std::invalid_argument("star product: need one table entry per arc");
    std::vector<bool> seen;
    for (const auto& levels : spec.tables) {
        if (levels.size() != spec.multiplicity)
            throw std::invalid_argument("star product: need one bijection per level per arc");
        for (const std::vector<Vertex>& perm : levels) {
            if (perm.size() != g2.order())
                throw std::invalid_argument("star product: bijection size does not match second factor");
            seen.assign(g2.order(), false);
            for (Vertex image : perm) {
                if (image >= g2.order() || seen[image])
                    throw std::invalid_argument("star product: table entry is not a bijection");
                seen[image] = true;
            }
        }
    }
}

}  // namespace

Graph multiple_star_product(const StarSpec& spec, const Graph& g2) {
    validate_star_spec(spec, g2);
    const std::uint64_t n1 = spec.base.order();
    const std::uint64_t n2 = g2.order();
    GraphBuilder b(n1 * n2);
    auto id = [n2](Vertex u, Vertex v) { return static_cast<Vertex>(u * n2 + v); };

    const std::vector<Edge> g2_edges = g2.edges();
    for (Vertex u = 0; u < n1; ++u)
        for (const Edge& e : g2_edges) b.add_edge(id(u, e.first), id(u, e.second));

    for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
        auto [u, w] = spec.arcs[a];
        for (const std::vector<Vertex>& perm : spec.tables[a])
            for (Vertex v = 0; v < n2; ++v) b.add_edge(id(u, v), id(w, perm[v]));
    }
    return b.build();
}

Graph star_product(const StarSpec& spec, const Graph& g2) {
    if (spec.multiplicity != 1) throw std::invalid_argument("star product: multiplicity must be exactly 1");
    return multiple_star_product(spec, g2);
}

namespace {

template <typename Ctx>
Graph orthogonality_graph(const Ctx& ctx, const std::vector<Vec3>& pts) {
    GraphBuilder b(pts.size());
    for (Vertex i = 0; i < pts.size(); ++i)
        for (Vertex j = i + 1; j < pts.size(); ++j)
            if (dot3(ctx, pts[i], pts[j]) == 0) b.add_edge(i, j);
    return b.build();
}

}  // namespace

Graph brown_field(std::uint32_t q) {
    FiniteField f = FiniteField::make(q);
    return orthogonality_graph(f, projective_points_field(f));
}

Graph brown_ring(std::uint32_t n) {
    RingZn r = RingZn::make(n);
    return orthogonality_graph(r, projective_points_ring(r));
}

Vertex lowest_min_degree_vertex(const Graph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

Graph duplicate_vertices(const Graph& base, const DuplicationPlan& plan) {
    if (plan.target >= base.order())
        throw std::invalid_argument("duplicate: target " + std::to_string(plan.target) + " out of range");
    if (plan.copies > 0 && base.degree(plan.target) == 0)
        throw std::invalid_argument("duplicate: target vertex is isolated");

    const std::uint64_t order = static_cast<std::uint64_t>(base.order()) + plan.copies;
    GraphBuilder b(order);
    for (const Edge& e : base.edges()) b.add_edge(e.first, e.second);
    for (std::uint32_t c = 0; c < plan.copies; ++c) {
        Vertex copy = base.order() + c;
        for (Vertex w : base.neighbors(plan.target)) b.add_edge(copy, w);
        if (plan.clique) {
            b.add_edge(copy, plan.target);
            for (std::uint32_t prev = 0; prev < c; ++prev) b.add_edge(copy, base.order() + prev);
        }
    }
    return b.build();
}

Graph kg8(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("kg8: factor must be at least 1");
    StarSpec spec;
    spec.base = complete(n);
    spec.multiplicity = 1;
    const auto& phi = g8_phi();
    const std::vector<Vertex> table(phi.begin(), phi.end());
    spec.arcs = spec.base.edges();
    spec.tables.assign(spec.arcs.size(), {table});
    return star_product(spec, g8());
}

Graph kkg8(std::uint32_t a, std::uint32_t b) {
    if (a < 1) throw std::invalid_argument("kkg8: outer factor must be at least 1");
    if (b < 3) throw std::invalid_argument("kkg8: inner factor must be at least 3");
    Graph inner = kg8(b);

    // Lift the id permutations of G_8 to kg8(b): each block of 8 is one copy.
    std::vector<std::vector<Vertex>> levels;
    for (const auto& psi : g8_psi_tables()) {
        std::vector<Vertex> lifted(inner.order());
        for (Vertex v = 0; v < inner.order(); ++v) lifted[v] = (v / 8) * 8 + psi[v % 8];
        levels.push_back(std::move(lifted));
    }

    StarSpec spec;
    spec.base = complete(a);
    spec.multiplicity = 4;
    spec.arcs = spec.base.edges();
    spec.tables.assign(spec.arcs.size(), levels);
    return multiple_star_product(spec, inner);
}

SubsetAdjacencyReport verify_prop1_machinery() {
    SubsetAdjacencyReport r;
    const std::array<Vertex, 4> A = {0, 2, 3, 4};  // (0,0),(1,0),(1,1),(1,2)
    const std::array<Vertex, 4> B = {1, 5, 6, 7};  // (0,1),(2,0),(2,1),(2,2)
    const std::array<Vertex, 4> C = {0, 1, 2, 6};  // (0,0),(0,1),(1,0),(2,1)
    const std::array<Vertex, 4> D = {3, 4, 5, 7};  // (1,1),(1,2),(2,0),(2,2)
    r.subsets = {A, B, C, D};

    auto partitions = [](const std::array<Vertex, 4>& s, const std::array<Vertex, 4>& t) {
        std::set<Vertex> all(s.begin(), s.end());
        all.insert(t.begin(), t.end());
        return all.size() == 8 && *all.rbegin() == 7;
    };
    r.ab_partitions = partitions(A, B);
    r.cd_partitions = partitions(C, D);

    // S ~ T: every S vertex has a neighbor in T, and every T vertex one in S.
    Graph g = g8();
    auto covers = [&g](const std::array<Vertex, 4>& s, const std::array<Vertex, 4>& t) {
        for (Vertex v : s) {
            bool hit = false;
            for (Vertex w : t) hit = hit || (v != w && g.adjacent(v, w));
            if (!hit) return false;
        }
        return true;
    };
    r.c_adjacent_d = covers(C, D) && covers(D, C);

    auto psi_images_equal = [](const std::array<Vertex, 4>& from, const std::array<Vertex, 4>& to) {
        const std::set<Vertex> want(to.begin(), to.end());
        for (Vertex v : from) {
            std::set<Vertex> images;
            for (const auto& psi : g8_psi_tables()) images.insert(psi[v]);
            if (images != want) return false;
        }
        return true;
    };
    r.a_covers_c = psi_images_equal(A, C);
    r.b_covers_d = psi_images_equal(B, D);
    return r;
}

}  // namespace ordeg
