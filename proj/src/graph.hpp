#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ordeg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Largest vertex count any constructor will produce. Keeps a mistyped CLI
// parameter from exhausting memory; raising it is a recompile.
inline constexpr std::uint64_t kMaxOrder = 1u << 20;

// Simple undirected graph, immutable once built. Vertices are 0..order-1,
// adjacency lists sorted and duplicate-free, no self-loops.
class Graph {
public:
    // Zero vertices; a placeholder until a real graph is assigned.
    Graph() = default;

    static Graph from_edges(std::uint64_t order, std::span<const Edge> edges);

    Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    Vertex degree(Vertex v) const { return static_cast<Vertex>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

private:
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adj_;
    std::uint64_t edge_count_ = 0;
};

// Accumulates undirected edges, then produces a deduplicated Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::uint64_t order);

    Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
    void add_edge(Vertex u, Vertex v);
    Graph build();

private:
    std::vector<std::vector<Vertex>> adj_;
};

}  // namespace ordeg
