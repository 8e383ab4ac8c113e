#include "graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ordeg {

Graph Graph::from_edges(std::uint64_t order, std::span<const Edge> edges) {
    GraphBuilder b(order);
    for (const Edge& e : edges) b.add_edge(e.first, e.second);
    return b.build();
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v >= adj_.size()) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const std::vector<Vertex>& nu = neighbors(u);
    if (v >= adj_.size()) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (v > u) out.emplace_back(u, v);
    return out;
}

GraphBuilder::GraphBuilder(std::uint64_t order) {
    if (order == 0) throw std::invalid_argument("graph order must be at least 1");
    if (order > kMaxOrder)
        throw limit_error("graph order " + std::to_string(order) + " exceeds supported maximum " +
                                    std::to_string(kMaxOrder));
    adj_.resize(order);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
    if (u >= adj_.size() || v >= adj_.size())
        throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

Graph GraphBuilder::build() {
    Graph g;
    g.adj_ = std::move(adj_);
    adj_.clear();
    std::uint64_t total = 0;
    for (std::vector<Vertex>& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.shrink_to_fit();
        total += list.size();
    }
    g.edge_count_ = total / 2;
    return g;
}

}  // namespace ordeg
