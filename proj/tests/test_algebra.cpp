#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "algebra.hpp"
#include "errors.hpp"

using namespace ordeg;

namespace {

// Sieve-based primality, independent of the trial-division code under test.
std::vector<bool> sieve(std::uint64_t n) {
    std::vector<bool> is(n + 1, true);
    is[0] = false;
    if (n >= 1) is[1] = false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (is[p])
            for (std::uint64_t q = p * p; q <= n; q += p) is[q] = false;
    return is;
}

}  // namespace

TEST_CASE("factorization") {
    using F = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
    CHECK(factorize(2) == F{{2, 1}});
    CHECK(factorize(12) == F{{2, 2}, {3, 1}});
    CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(97) == F{{97, 1}});
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);

    auto is = sieve(1000);
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        CHECK(is_prime(n) == is[n]);
        // Factorization multiplies back and uses only primes.
        std::uint64_t prod = 1;
        for (auto [p, k] : factorize(n)) {
            CHECK(is[p]);
            for (std::uint32_t i = 0; i < k; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("prime powers") {
    std::uint64_t p = 0;
    std::uint32_t k = 0;
    CHECK(is_prime_power(8, &p, &k));
    CHECK(p == 2);
    CHECK(k == 3);
    CHECK(is_prime_power(9, &p, &k));
    CHECK(p == 3);
    CHECK(k == 2);
    CHECK(is_prime_power(7, &p, &k));
    CHECK(k == 1);
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(100));
    CHECK(is_prime_power(128));
}

TEST_CASE("field construction picks the first irreducible modulus") {
    // Coefficients low to high; digit encodings are base p.
    CHECK(FiniteField::make(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});   // x^2+x+1
    CHECK(FiniteField::make(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // x^3+x+1
    CHECK(FiniteField::make(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});   // x^2+1
    CHECK_THROWS_AS(FiniteField::make(6), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField::make(521), limit_error);
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        CAPTURE(q);
        FiniteField f = FiniteField::make(q);
        CHECK(f.size() == q);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.sub(a, a) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inv(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1);
            }
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // No zero divisors.
        for (std::uint32_t a = 1; a < q; ++a)
            for (std::uint32_t b = 1; b < q; ++b) CHECK(f.mul(a, b) != 0);
    }
}

TEST_CASE("frobenius is additive in small extension fields") {
    for (std::uint32_t q : {4u, 8u, 9u, 16u, 25u, 27u}) {
        FiniteField f = FiniteField::make(q);
        std::uint32_t p = f.characteristic();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
}

TEST_CASE("ring units and arithmetic") {
    RingZn r = RingZn::make(12);
    CHECK(r.modulus() == 12);
    CHECK(r.units() == std::vector<std::uint32_t>{1, 5, 7, 11});
    CHECK(r.add(7, 8) == 3);
    CHECK(r.mul(5, 7) == 11);
    using F = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
    CHECK(r.factorization() == F{{2, 2}, {3, 1}});
    CHECK_THROWS_AS(RingZn::make(1), std::invalid_argument);
    CHECK_THROWS_AS(RingZn::make(513), limit_error);

    // Unit counts match Euler's totient.
    for (std::uint32_t n = 2; n <= 60; ++n) {
        std::uint32_t phi = 0;
        for (std::uint32_t a = 1; a < n; ++a)
            if (std::gcd(a, n) == 1) ++phi;
        CHECK(RingZn::make(n).units().size() == phi);
    }
}

TEST_CASE("projective points over fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u}) {
        CAPTURE(q);
        FiniteField f = FiniteField::make(q);
        auto pts = projective_points_field(f);
        CHECK(pts.size() == static_cast<std::size_t>(q) * q + q + 1);
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        std::set<Vec3> uniq(pts.begin(), pts.end());
        CHECK(uniq.size() == pts.size());
        for (const Vec3& v : pts) {
            // First nonzero coordinate is scaled to 1.
            std::uint32_t lead = v[0] != 0 ? v[0] : v[1] != 0 ? v[1] : v[2];
            CHECK(lead == 1);
        }
    }
    auto p2 = projective_points_field(FiniteField::make(2));
    std::vector<Vec3> want{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}};
    CHECK(p2 == want);
}

TEST_CASE("projective points over rings match orbit enumeration") {
    for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 10u, 12u}) {
        CAPTURE(n);
        RingZn r = RingZn::make(n);
        auto pts = projective_points_ring(r);

        // Independent count: canonicalize every primitive vector by taking
        // the smallest element of its unit orbit.
        std::set<Vec3> canon;
        std::uint64_t primitive = 0;
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y)
                for (std::uint32_t z = 0; z < n; ++z) {
                    std::uint32_t g = std::gcd(std::gcd(x, y), std::gcd(z, n));
                    if (g != 1) continue;
                    ++primitive;
                    Vec3 best{x, y, z};
                    for (std::uint32_t u : r.units()) {
                        Vec3 w{r.mul(u, x), r.mul(u, y), r.mul(u, z)};
                        if (w < best) best = w;
                    }
                    canon.insert(best);
                }
        CHECK(pts.size() == canon.size());
        CHECK(std::vector<Vec3>(canon.begin(), canon.end()) == pts);
        // The unit action on primitive vectors is free: orbits all have
        // size phi(n).
        CHECK(primitive == canon.size() * r.units().size());
    }
    CHECK(projective_points_ring(RingZn::make(4)).size() == 28);
    CHECK(projective_points_ring(RingZn::make(6)).size() == 91);
}

TEST_CASE("ring points match field points at prime moduli") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
        auto ring = projective_points_ring(RingZn::make(p));
        auto field = projective_points_field(FiniteField::make(p));
        CHECK(ring == field);
    }
}

TEST_CASE("orthogonality form") {
    FiniteField f = FiniteField::make(3);
    CHECK(dot3(f, {1, 2, 0}, {1, 1, 2}) == 0);
    CHECK(dot3(f, {1, 0, 0}, {1, 0, 0}) == 1);
    CHECK_THROWS_AS(dot3(f, {3, 0, 0}, {1, 0, 0}), std::invalid_argument);
    RingZn r = RingZn::make(4);
    CHECK(dot3(r, {1, 2, 3}, {2, 1, 0}) == 0);
    CHECK_THROWS_AS(dot3(r, {1, 2, 4}, {2, 1, 0}), std::invalid_argument);
}
