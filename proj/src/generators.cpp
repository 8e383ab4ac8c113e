#include "generators.hpp"

#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ordeg {

namespace {

// order = base^exp with the graph-size cap enforced.
std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, const char* what) {
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (v > kMaxOrder / base)
            throw limit_error(std::string(what) + ": order would exceed " + std::to_string(kMaxOrder));
        v *= base;
    }
    return v;
}

}  // namespace

Graph petersen() {
    GraphBuilder b(10);
    auto id = [](Vertex ring, Vertex j) { return 5 * ring + j; };
    for (Vertex ring = 0; ring < 2; ++ring)
        for (Vertex j = 0; j < 5; ++j) b.add_edge(id(ring, j), id(ring, (j + 1) % 5));
    for (Vertex l = 0; l < 5; ++l) b.add_edge(id(0, (2 * l) % 5), id(1, l));
    return b.build();
}

Graph hypercube(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("hypercube: dimension must be at least 1");
    std::uint64_t order = checked_power(2, n, "hypercube");
    GraphBuilder b(order);
    for (std::uint64_t x = 0; x < order; ++x)
        for (std::uint32_t bit = 0; bit < n; ++bit) {
            std::uint64_t y = x ^ (std::uint64_t(1) << bit);
            if (y > x) b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
        }
    return b.build();
}

Graph torus_grid(std::uint32_t m, std::uint32_t n) {
    if (m < 3) throw std::invalid_argument("torus_grid: side must be at least 3");
    if (n < 1) throw std::invalid_argument("torus_grid: dimension must be at least 1");
    std::uint64_t order = checked_power(m, n, "torus_grid");
    GraphBuilder b(order);
    // Vertex id encodes base-m digits, digit i = coordinate i.
    std::uint64_t stride = 1;
    for (std::uint32_t dim = 0; dim < n; ++dim) {
        for (std::uint64_t x = 0; x < order; ++x) {
            std::uint64_t digit = (x / stride) % m;
            std::uint64_t up = x - digit * stride + ((digit + 1) % m) * stride;
            b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(up));
        }
        stride *= m;
    }
    return b.build();
}

Graph de_bruijn_undirected(std::uint32_t t, std::uint32_t n) {
    if (t < 2) throw std::invalid_argument("de_bruijn: alphabet must have at least 2 symbols");
    if (n < 2) throw std::invalid_argument("de_bruijn: word length must be at least 2");
    std::uint64_t order = checked_power(t, n, "de_bruijn");
    GraphBuilder b(order);
    for (std::uint64_t u = 0; u < order; ++u) {
        std::uint64_t shifted = (u * t) % order;
        for (std::uint32_t x = 0; x < t; ++x) {
            std::uint64_t w = shifted + x;
            if (w != u) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(w));
        }
    }
    return b.build();
}

Graph complete(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("complete: order must be at least 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle(std::uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
    return b.build();
}

}  // namespace ordeg
