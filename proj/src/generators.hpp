#pragma once

#include <cstdint>

#include "graph.hpp"

namespace ordeg {

// Two pentagons joined by a perfect matching; isomorphic to the standard
// 3-regular diameter-2 graph on 10 vertices.
Graph petersen();

// n-dimensional binary cube, order 2^n.
Graph hypercube(std::uint32_t n);

// n-dimensional wraparound grid with side m (m >= 3), order m^n, 2n-regular.
Graph torus_grid(std::uint32_t m, std::uint32_t n);

// Undirected shift graph on words of length n over t symbols (n >= 2):
// u ~ w when w is u shifted by one symbol, loops dropped. Order t^n,
// max degree at most 2t, diameter at most n.
Graph de_bruijn_undirected(std::uint32_t t, std::uint32_t n);

Graph complete(std::uint32_t n);

Graph cycle(std::uint32_t n);

}  // namespace ordeg
