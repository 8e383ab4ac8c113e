#include "algebra.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ordeg {

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorize: argument must be at least 2");
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(std::uint64_t q, std::uint64_t* p, std::uint32_t* k) {
    if (q < 2) return false;
    auto f = factorize(q);
    if (f.size() != 1) return false;
    if (p) *p = f[0].first;
    if (k) *k = f[0].second;
    return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    return trimmed(std::move(out));
}

// Remainder of a modulo monic m over Z/pZ.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    a = trimmed(std::move(a));
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[i] % p;
            std::uint32_t& c = a[shift + i];
            c = static_cast<std::uint32_t>((c + p - sub) % p);
        }
        a = trimmed(std::move(a));
    }
    return a;
}

bool poly_divides(const Poly& divisor, const Poly& f, std::uint32_t p) {
    return poly_mod(f, divisor, p).empty();
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

Poly decode(std::uint32_t v, std::uint32_t p) {
    Poly a;
    while (v) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p
// digits of m; enumerating m in order walks the encoding order.
Poly monic_from_index(std::uint32_t m, std::uint32_t d, std::uint32_t p) {
    Poly f = decode(m, p);
    f.resize(d + 1, 0);
    f[d] = 1;
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
    for (std::uint32_t d = 1; d < k; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t m = 0; m < count; ++m)
            if (poly_divides(monic_from_index(static_cast<std::uint32_t>(m), d, p), f, p)) return false;
    }
    return true;
}

}  // namespace

FiniteField FiniteField::make(std::uint32_t q) {
    std::uint64_t p64;
    std::uint32_t k;
    if (!is_prime_power(q, &p64, &k))
        throw std::invalid_argument("finite field size " + std::to_string(q) + " is not a prime power");
    if (q > kMaxModulus)
        throw limit_error("finite field size " + std::to_string(q) + " exceeds supported maximum " +
                                    std::to_string(kMaxModulus));
    const std::uint32_t p = static_cast<std::uint32_t>(p64);

    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t m = 0; m < count; ++m) {
        Poly f = monic_from_index(static_cast<std::uint32_t>(m), k, p);
        if (is_irreducible(f, p)) return FiniteField(q, p, k, f);
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

void FiniteField::check_element(std::uint32_t a) const {
    if (a >= q_)
        throw std::invalid_argument("element " + std::to_string(a) + " outside GF(" + std::to_string(q_) + ")");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (k_ == 1) return (a + b) % p_;
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (a % p_ + b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (k_ == 1) return (a + p_ - b) % p_;
    std::uint32_t out = 0, place = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += (a % p_ + p_ - b % p_) % p_ * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return out;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    if (k_ == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    Poly prod = poly_mul(decode(a, p_), decode(b, p_), p_);
    return encode(poly_mod(std::move(prod), modulus_, p_), p_);
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
    check_element(a);
    std::uint32_t base = a, out = 1;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("finite field: zero has no inverse");
    return pow(a, static_cast<std::uint64_t>(q_) - 2);
}

RingZn RingZn::make(std::uint32_t n) {
    if (n < 2) throw std::invalid_argument("ring modulus must be at least 2");
    if (n > kMaxModulus)
        throw limit_error("ring modulus " + std::to_string(n) + " exceeds supported maximum " +
                                    std::to_string(kMaxModulus));
    std::vector<std::uint32_t> units;
    for (std::uint32_t u = 1; u < n; ++u)
        if (std::gcd(u, n) == 1) units.push_back(u);
    return RingZn(n, factorize(n), std::move(units));
}

void RingZn::check_element(std::uint32_t a) const {
    if (a >= n_)
        throw std::invalid_argument("element " + std::to_string(a) + " outside Z/" + std::to_string(n_) + "Z");
}

std::uint32_t RingZn::add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    return (a + b) % n_;
}

std::uint32_t RingZn::mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % n_);
}

std::vector<Vec3> projective_points_field(const FiniteField& f) {
    const std::uint32_t q = f.size();
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(q) * q + q + 1);
    pts.push_back({0, 0, 1});
    for (std::uint32_t z = 0; z < q; ++z) pts.push_back({0, 1, z});
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z) pts.push_back({1, y, z});
    return pts;
}

std::vector<Vec3> projective_points_ring(const RingZn& r) {
    const std::uint32_t n = r.modulus();
    const std::vector<std::uint32_t>& units = r.units();
    std::vector<Vec3> pts;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z) {
                if (std::gcd(std::gcd(x, y), std::gcd(z, n)) != 1) continue;
                Vec3 v{x, y, z};
                bool minimal = true;
                for (std::uint32_t u : units) {
                    if (u == 1) continue;
                    Vec3 w{r.mul(u, x), r.mul(u, y), r.mul(u, z)};
                    if (w < v) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) pts.push_back(v);
            }
    return pts;  // loop order is already lexicographic
}

std::uint32_t dot3(const FiniteField& f, const Vec3& v, const Vec3& w) {
    std::uint32_t s = f.mul(v[0], w[0]);
    s = f.add(s, f.mul(v[1], w[1]));
    return f.add(s, f.mul(v[2], w[2]));
}

std::uint32_t dot3(const RingZn& r, const Vec3& v, const Vec3& w) {
    std::uint32_t s = r.mul(v[0], w[0]);
    s = r.add(s, r.mul(v[1], w[1]));
    return r.add(s, r.mul(v[2], w[2]));
}

}  // namespace ordeg
