#include "families.hpp"

#include <stdexcept>
#include <string>

#include "algebra.hpp"
#include "bounds.hpp"
#include "constructions.hpp"
#include "generators.hpp"

namespace ordeg {

namespace {

[[noreturn]] void bad_family(std::string_view family) {
    throw std::invalid_argument("unknown family '" + std::string(family) +
                                "'; expected one of: petersen hypercube torus debruijn complete cycle g8 "
                                "brown-f brown-z kg8 kkg8");
}

void want_params(std::string_view family, std::span<const std::uint64_t> params, std::size_t n) {
    if (params.size() != n)
        throw std::invalid_argument(std::string(family) + ": expected " + std::to_string(n) + " parameter" +
                                    (n == 1 ? "" : "s") + ", got " + std::to_string(params.size()));
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::string_view family) {
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base == 0 || v > kMaxOrder / base)
            throw std::invalid_argument(std::string(family) + ": order would exceed " + std::to_string(kMaxOrder));
        v *= base;
    }
    return v;
}

std::uint32_t narrow(std::uint64_t v, std::string_view family) {
    if (v > UINT32_MAX) throw std::invalid_argument(std::string(family) + ": parameter out of range");
    return static_cast<std::uint32_t>(v);
}

}  // namespace

Prediction predict_family(std::string_view family, std::span<const std::uint64_t> params) {
    Prediction p;
    if (family == "petersen") {
        want_params(family, params, 0);
        return {10, 3, 2, false, false};
    }
    if (family == "hypercube") {
        want_params(family, params, 1);
        std::uint64_t n = params[0];
        if (n < 1) throw std::invalid_argument("hypercube: dimension must be at least 1");
        return {checked_power(2, n, family), n, static_cast<std::uint32_t>(n), false, false};
    }
    if (family == "torus") {
        want_params(family, params, 2);
        std::uint64_t m = params[0], n = params[1];
        if (m < 3) throw std::invalid_argument("torus_grid: side must be at least 3");
        if (n < 1) throw std::invalid_argument("torus_grid: dimension must be at least 1");
        return {checked_power(m, n, family), 2 * n, static_cast<std::uint32_t>(n * (m / 2)), false, false};
    }
    if (family == "debruijn") {
        want_params(family, params, 2);
        std::uint64_t t = params[0], n = params[1];
        if (t < 2) throw std::invalid_argument("de_bruijn: alphabet must have at least 2 symbols");
        if (n < 2) throw std::invalid_argument("de_bruijn: word length must be at least 2");
        return {checked_power(t, n, family), 2 * t, static_cast<std::uint32_t>(n), true, true};
    }
    if (family == "complete") {
        want_params(family, params, 1);
        std::uint64_t n = params[0];
        if (n < 1) throw std::invalid_argument("complete: order must be at least 1");
        if (n > kMaxOrder) throw std::invalid_argument("complete: order would exceed " + std::to_string(kMaxOrder));
        return {n, n - 1, n >= 2 ? std::optional<std::uint32_t>(1) : std::optional<std::uint32_t>(0), false, false};
    }
    if (family == "cycle") {
        want_params(family, params, 1);
        std::uint64_t n = params[0];
        if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
        if (n > kMaxOrder) throw std::invalid_argument("cycle: order would exceed " + std::to_string(kMaxOrder));
        return {n, 2, static_cast<std::uint32_t>(n / 2), false, false};
    }
    if (family == "g8") {
        want_params(family, params, 0);
        return {8, 3, 2, false, false};
    }
    if (family == "brown-f") {
        want_params(family, params, 1);
        std::uint64_t q = params[0];
        if (!is_prime_power(q))
            throw std::invalid_argument("brown-f: field size " + std::to_string(q) + " is not a prime power");
        if (q > kMaxModulus)
            throw std::invalid_argument("brown-f: field size exceeds supported maximum " +
                                        std::to_string(kMaxModulus));
        return {q * q + q + 1, q + 1, 2, false, false};
    }
    if (family == "brown-z") {
        want_params(family, params, 1);
        std::uint64_t n = params[0];
        if (n < 2) throw std::invalid_argument("brown-z: modulus must be at least 2");
        if (n > kMaxModulus)
            throw std::invalid_argument("brown-z: modulus exceeds supported maximum " + std::to_string(kMaxModulus));
        return {brown_ring_order(n), brown_ring_degree(n), 2, false, false};
    }
    if (family == "kg8") {
        want_params(family, params, 1);
        std::uint64_t n = params[0];
        if (n < 1) throw std::invalid_argument("kg8: factor must be at least 1");
        if (8 * n > kMaxOrder) throw std::invalid_argument("kg8: order would exceed " + std::to_string(kMaxOrder));
        p.order = 8 * n;
        p.max_degree = n + 2;
        if (n >= 3) p.diameter = 2;  // no closed form below 3
        return p;
    }
    if (family == "kkg8") {
        want_params(family, params, 2);
        std::uint64_t a = params[0], b = params[1];
        if (a < 1) throw std::invalid_argument("kkg8: outer factor must be at least 1");
        if (b < 3) throw std::invalid_argument("kkg8: inner factor must be at least 3");
        if (a > kMaxOrder / 8 / b) throw std::invalid_argument("kkg8: order would exceed " + std::to_string(kMaxOrder));
        return {8 * a * b, 4 * a + b - 2, 2, false, false};
    }
    bad_family(family);
}

Graph build_family(std::string_view family, std::span<const std::uint64_t> params) {
    predict_family(family, params);  // shared validation
    if (family == "petersen") return petersen();
    if (family == "hypercube") return hypercube(narrow(params[0], family));
    if (family == "torus") return torus_grid(narrow(params[0], family), narrow(params[1], family));
    if (family == "debruijn") return de_bruijn_undirected(narrow(params[0], family), narrow(params[1], family));
    if (family == "complete") return complete(narrow(params[0], family));
    if (family == "cycle") return cycle(narrow(params[0], family));
    if (family == "g8") return g8();
    if (family == "brown-f") return brown_field(narrow(params[0], family));
    if (family == "brown-z") return brown_ring(narrow(params[0], family));
    if (family == "kg8") return kg8(narrow(params[0], family));
    if (family == "kkg8") return kkg8(narrow(params[0], family), narrow(params[1], family));
    bad_family(family);
}

}  // namespace ordeg
