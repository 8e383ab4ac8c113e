#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace ordeg {

inline constexpr std::uint32_t kDefaultOracleCap = 512;
inline constexpr std::int32_t kUnreachable = -1;

struct DegreeStats {
    Vertex min_degree = 0;
    Vertex max_degree = 0;
    bool is_regular = true;
    std::map<Vertex, std::uint64_t> histogram;  // degree -> vertex count
};

struct MetricsReport {
    std::uint64_t order = 0;
    std::uint64_t edge_count = 0;
    DegreeStats degrees;
    bool is_connected = false;
    std::optional<std::uint32_t> diameter;  // absent when disconnected
    std::optional<Rational> aspl;           // num = sum over ordered pairs, den = N(N-1)
    std::optional<std::uint32_t> girth;     // absent when acyclic
};

// Hop distances from source; kUnreachable marks other components.
std::vector<std::int32_t> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

// Max eccentricity; nullopt when disconnected. Order must be at least 2.
std::optional<std::uint32_t> diameter(const Graph& g);

// Mean shortest-path length over ordered pairs, exact. Requires a connected
// graph of order at least 2.
Rational aspl(const Graph& g);

DegreeStats degree_stats(const Graph& g);

// Shortest cycle length; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

MetricsReport compute_metrics(const Graph& g);

// All-pairs distances by repeated relaxation over vertex triples, kept
// deliberately independent of the BFS code path. Row-major order*order,
// kUnreachable for disconnected pairs. Refuses orders above the cap.
std::vector<std::int32_t> oracle_all_pairs(const Graph& g, std::uint32_t cap = kDefaultOracleCap);

}  // namespace ordeg
