#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "graph.hpp"

namespace ordeg {

// Closed-form parameters a family promises before construction. Degree and
// diameter can be upper bounds rather than exact values (the shift graphs).
struct Prediction {
    std::uint64_t order = 0;
    std::uint64_t max_degree = 0;
    std::optional<std::uint32_t> diameter;
    bool degree_is_bound = false;
    bool diameter_is_bound = false;
};

// Families: petersen, hypercube n, torus m n, debruijn t n, complete n,
// cycle n, g8, brown-f q, brown-z n, kg8 n, kkg8 a b.
Prediction predict_family(std::string_view family, std::span<const std::uint64_t> params);
Graph build_family(std::string_view family, std::span<const std::uint64_t> params);

}  // namespace ordeg
