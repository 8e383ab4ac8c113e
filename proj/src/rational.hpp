#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ordeg {

// Exact nonnegative rational on 64-bit parts. Comparisons cross-multiply in
// 128 bits so unreduced forms compare correctly.
struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    Rational() = default;
    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
    }

    Rational reduced() const {
        std::uint64_t g = std::gcd(num, den);
        return Rational(num / g, den / g);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num) * b.den ==
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<unsigned __int128>(a.num) * b.den <
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    // a - b, reduced; requires a >= b and a reducible result that fits 64 bits.
    static Rational subtract(const Rational& a, const Rational& b) {
        if (a < b) throw std::domain_error("rational: negative difference");
        unsigned __int128 n = static_cast<unsigned __int128>(a.num) * b.den -
                              static_cast<unsigned __int128>(b.num) * a.den;
        unsigned __int128 d = static_cast<unsigned __int128>(a.den) * b.den;
        unsigned __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (n > UINT64_MAX || d > UINT64_MAX)
            throw std::domain_error("rational: difference does not fit 64 bits");
        return Rational(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d));
    }

    std::string fraction_string() const {
        Rational r = reduced();
        return std::to_string(r.num) + "/" + std::to_string(r.den);
    }

    // Six significant digits, shortest form ("1.91373", "1", "1.66667").
    std::string decimal_string() const {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g",
                      static_cast<double>(num) / static_cast<double>(den));
        return buf;
    }

private:
    static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
        while (b != 0) {
            unsigned __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

}  // namespace ordeg
