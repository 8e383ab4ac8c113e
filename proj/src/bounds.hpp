#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graph.hpp"
#include "metrics.hpp"
#include "rational.hpp"

namespace ordeg {

using BigInt = boost::multiprecision::cpp_int;

// 1 + delta * sum_{k<d} (delta-1)^k. Exact; results are capped at 2048 bits
// so they always render into fixed buffers.
BigInt moore_bound(std::uint64_t degree, std::uint64_t diam);

// order as a percentage of moore_bound(degree, diam), two decimals, round
// half up: "52.78". No percent sign.
std::string moore_ratio_pct(const BigInt& order, std::uint64_t degree, std::uint64_t diam);

// Mean-distance floor for order/degree from greedy BFS-layer filling:
// (sum of k * min(layer capacity, remaining)) / (order - 1). Degree-regular
// diameter-2 graphs meet it with equality iff ASPL is minimal.
Rational aspl_lower_bound(std::uint64_t order, std::uint64_t degree);

enum class OptimumKind { known, open, unknown };

struct Optimum {
    OptimumKind kind = OptimumKind::unknown;
    std::uint64_t value = 0;  // known: the optimum; open: the undecided ceiling
};

Optimum known_optimum(std::uint64_t degree, std::uint64_t diam);

struct BoundReport {
    std::uint64_t degree = 0;
    std::uint64_t diam = 0;
    BigInt moore;
    Optimum optimum;
    std::optional<BigInt> brown;         // diam 2, degree-1 a prime power
    std::optional<BigInt> de_bruijn;     // even degree >= 4
    std::optional<BigInt> power_of_two;  // diam 2, degree a power of two
};

BoundReport construction_lower_bounds(std::uint64_t degree, std::uint64_t diam);

struct ConstructionPlan {
    enum class Family { complete, kkg8, kg8, brown_field_dup, brown_ring_dup, de_bruijn };

    Family family = Family::complete;
    std::uint64_t p1 = 0;  // complete/kg8: n; kkg8: a; brown: q or modulus; de_bruijn: t
    std::uint64_t p2 = 0;  // kkg8: b; brown: duplicate count; de_bruijn: word length
    std::uint64_t predicted_order = 0;
    std::uint64_t predicted_degree = 0;
    std::uint32_t predicted_diameter = 2;

    std::string family_name() const;
    std::string params_string() const;
};

// Ranked candidates hitting the order exactly within the degree budget,
// best first: ascending predicted degree, then family order as listed in
// Family, then ascending parameters (kkg8 keyed by b first).
std::vector<ConstructionPlan> plan(std::uint64_t order, std::uint64_t degree);

struct CertifiedPlan {
    Graph graph;
    MetricsReport metrics;
    bool pass = false;  // measured order/degree/diameter meet the prediction
};

CertifiedPlan realize_and_certify(const ConstructionPlan& p);

struct TableRow {
    std::uint64_t degree = 0;
    std::uint64_t order = 0;
    ConstructionPlan best;
};

// Best planner-achievable diameter-2 order for each degree 2..max_degree.
std::vector<TableRow> best_order_table(std::uint64_t max_degree);

// Order and max degree of the orthogonality graph over Z/nZ, by formula.
std::uint64_t brown_ring_order(std::uint64_t n);
std::uint64_t brown_ring_degree(std::uint64_t n);

}  // namespace ordeg
