#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ordeg {

// Moduli above this are refused; orthogonality graphs over larger structures
// are out of desk range anyway.
inline constexpr std::uint32_t kMaxModulus = 512;

// Prime factorization (p, exponent), primes ascending. n must be at least 2.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// True when q = p^k for a single prime p; fills p and k when given.
bool is_prime_power(std::uint64_t q, std::uint64_t* p = nullptr, std::uint32_t* k = nullptr);

// GF(p^k) with elements encoded as integers 0..q-1 whose base-p digits are
// polynomial coefficients (digit i = coefficient of x^i). The reduction
// modulus is the first monic irreducible of degree k in that encoding order,
// verified by trial division against all lower-degree monic polynomials.
class FiniteField {
public:
    static FiniteField make(std::uint32_t q);

    std::uint32_t size() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t extension_degree() const noexcept { return k_; }
    // Coefficients low to high, length k+1, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // a != 0

private:
    FiniteField(std::uint32_t q, std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
        : q_(q), p_(p), k_(k), modulus_(std::move(modulus)) {}

    void check_element(std::uint32_t a) const;

    std::uint32_t q_, p_, k_;
    std::vector<std::uint32_t> modulus_;
};

// Z/nZ with its unit group enumerated.
class RingZn {
public:
    static RingZn make(std::uint32_t n);

    std::uint32_t modulus() const noexcept { return n_; }
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& factorization() const noexcept { return factors_; }
    const std::vector<std::uint32_t>& units() const noexcept { return units_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

private:
    RingZn(std::uint32_t n, std::vector<std::pair<std::uint64_t, std::uint32_t>> factors,
           std::vector<std::uint32_t> units)
        : n_(n), factors_(std::move(factors)), units_(std::move(units)) {}

    void check_element(std::uint32_t a) const;

    std::uint32_t n_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors_;
    std::vector<std::uint32_t> units_;
};

using Vec3 = std::array<std::uint32_t, 3>;

// Projective points over GF(q): one representative per line through the
// origin of GF(q)^3, first nonzero coordinate scaled to 1, listed in
// ascending lexicographic order. Count q^2 + q + 1.
std::vector<Vec3> projective_points_field(const FiniteField& f);

// Projective points over Z/nZ: primitive vectors (gcd with n of all three
// coordinates is 1) up to unit scaling, one lexicographically minimal
// representative per orbit, ascending.
std::vector<Vec3> projective_points_ring(const RingZn& r);

std::uint32_t dot3(const FiniteField& f, const Vec3& v, const Vec3& w);
std::uint32_t dot3(const RingZn& r, const Vec3& v, const Vec3& w);

}  // namespace ordeg
