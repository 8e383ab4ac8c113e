#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "algebra.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "generators.hpp"

namespace ordeg {

namespace {

constexpr unsigned kMooreBitCap = 2048;

void check_bits(const BigInt& v) {
    if (v > 0 && boost::multiprecision::msb(v) >= kMooreBitCap)
        throw limit_error("bound exceeds " + std::to_string(kMooreBitCap) + " bits; out of supported range");
}

}  // namespace

BigInt moore_bound(std::uint64_t degree, std::uint64_t diam) {
    if (degree < 2) throw std::invalid_argument("moore bound: degree must be at least 2");
    if (diam < 1) throw std::invalid_argument("moore bound: diameter must be at least 1");
    BigInt term = 1, sum = 0;
    for (std::uint64_t k = 0; k < diam; ++k) {
        sum += term;
        term *= degree - 1;
        check_bits(term);
        check_bits(sum);
    }
    BigInt m = 1 + degree * sum;
    check_bits(m);
    return m;
}

std::string moore_ratio_pct(const BigInt& order, std::uint64_t degree, std::uint64_t diam) {
    if (order < 1) throw std::invalid_argument("moore ratio: order must be at least 1");
    BigInt m = moore_bound(degree, diam);
    BigInt scaled = order * 10000;
    BigInt q = scaled / m;
    BigInt r = scaled % m;
    if (r * 2 >= m) ++q;  // round half up
    BigInt whole = q / 100, frac = q % 100;
    std::string f = frac.str();
    if (f.size() < 2) f.insert(0, "0");
    return whole.str() + "." + f;
}

Rational aspl_lower_bound(std::uint64_t order, std::uint64_t degree) {
    if (order < 2) throw std::invalid_argument("aspl lower bound: order must be at least 2");
    if (degree < 1) throw std::invalid_argument("aspl lower bound: degree must be at least 1");
    if (degree >= order)
        throw std::invalid_argument("aspl lower bound: degree must be below order (complete graph regime)");
    if (degree == 1 && order > 2)
        throw std::invalid_argument("aspl lower bound: degree 1 admits order at most 2");
    std::uint64_t remaining = order - 1;
    std::uint64_t num = 0;
    unsigned __int128 layer = degree;
    for (std::uint64_t k = 1; remaining > 0; ++k) {
        std::uint64_t take = layer < remaining ? static_cast<std::uint64_t>(layer) : remaining;
        num += k * take;
        remaining -= take;
        layer *= degree - 1;
        if (layer > remaining) layer = remaining;  // keep the running product small
    }
    return Rational(num, order - 1);
}

Optimum known_optimum(std::uint64_t degree, std::uint64_t diam) {
    if (diam == 1 && degree >= 1) return {OptimumKind::known, degree + 1};
    if (diam == 2) {
        switch (degree) {
            case 2: return {OptimumKind::known, 5};
            case 3: return {OptimumKind::known, 10};
            case 6: return {OptimumKind::known, 32};
            case 7: return {OptimumKind::known, 50};
            case 57: return {OptimumKind::open, 3250};
            default: break;
        }
    }
    return {OptimumKind::unknown, 0};
}

BoundReport construction_lower_bounds(std::uint64_t degree, std::uint64_t diam) {
    BoundReport r;
    r.degree = degree;
    r.diam = diam;
    r.moore = moore_bound(degree, diam);
    r.optimum = known_optimum(degree, diam);
    if (diam == 2) {
        if (degree >= 3 && is_prime_power(degree - 1))
            r.brown = BigInt(degree) * degree - degree + 1;
        if (degree >= 2 && (degree & (degree - 1)) == 0)
            r.power_of_two = BigInt(degree) * degree - degree + 2;
    }
    if (degree % 2 == 0) {
        BigInt v = 1;
        for (std::uint64_t i = 0; i < diam; ++i) {
            v *= degree / 2;
            check_bits(v);
        }
        r.de_bruijn = v;
    }
    return r;
}

std::uint64_t brown_ring_order(std::uint64_t n) {
    std::uint64_t out = 1;
    for (auto [p, k] : factorize(n)) {
        std::uint64_t pk1 = 1;  // p^(k-1)
        for (std::uint32_t i = 1; i < k; ++i) pk1 *= p;
        std::uint64_t pk = pk1 * p;
        out *= pk * pk + pk * pk1 + pk1 * pk1;
    }
    return out;
}

std::uint64_t brown_ring_degree(std::uint64_t n) {
    std::uint64_t out = 1;
    for (auto [p, k] : factorize(n)) {
        std::uint64_t pk1 = 1;
        for (std::uint32_t i = 1; i < k; ++i) pk1 *= p;
        out *= pk1 * p + pk1;
    }
    return out;
}

std::string ConstructionPlan::family_name() const {
    switch (family) {
        case Family::complete: return "complete";
        case Family::kkg8: return "kkg8";
        case Family::kg8: return "kg8";
        case Family::brown_field_dup: return "brown-f+dup";
        case Family::brown_ring_dup: return "brown-z+dup";
        case Family::de_bruijn: return "debruijn";
    }
    return "?";
}

std::string ConstructionPlan::params_string() const {
    switch (family) {
        case Family::complete: return "n=" + std::to_string(p1);
        case Family::kkg8: return "a=" + std::to_string(p1) + " b=" + std::to_string(p2);
        case Family::kg8: return "n=" + std::to_string(p1);
        case Family::brown_field_dup: return "q=" + std::to_string(p1) + " delta=" + std::to_string(p2);
        case Family::brown_ring_dup: return "n=" + std::to_string(p1) + " delta=" + std::to_string(p2);
        case Family::de_bruijn: return "t=" + std::to_string(p1) + " n=" + std::to_string(p2);
    }
    return "?";
}

namespace {

using Family = ConstructionPlan::Family;

int family_rank(Family f) { return static_cast<int>(f); }

// kkg8 instances with the same degree are ranked by b then a; every other
// family by its first parameter.
std::tuple<std::uint64_t, int, std::uint64_t, std::uint64_t> plan_key(const ConstructionPlan& p) {
    if (p.family == Family::kkg8) return {p.predicted_degree, family_rank(p.family), p.p2, p.p1};
    return {p.predicted_degree, family_rank(p.family), p.p1, p.p2};
}

void add_brown_candidates(std::vector<ConstructionPlan>& out, std::uint64_t order, std::uint64_t degree) {
    for (std::uint64_t q = 2; q <= kMaxModulus; ++q) {
        if (!is_prime_power(q)) continue;
        std::uint64_t base = q * q + q + 1;
        if (base > order) break;
        std::uint64_t delta = order - base;
        std::uint64_t pred = q + 1 + delta;
        if (pred > degree) continue;
        out.push_back({Family::brown_field_dup, q, delta, order, pred, 2});
    }
    for (std::uint64_t n = 2; n <= kMaxModulus; ++n) {
        if (is_prime(n)) continue;  // identical to the field case
        std::uint64_t base = brown_ring_order(n);
        if (base > order) continue;
        std::uint64_t delta = order - base;
        std::uint64_t pred = brown_ring_degree(n) + delta;
        if (pred > degree) continue;
        out.push_back({Family::brown_ring_dup, n, delta, order, pred, 2});
    }
}

}  // namespace

std::vector<ConstructionPlan> plan(std::uint64_t order, std::uint64_t degree) {
    if (order < 1) throw std::invalid_argument("plan: order must be at least 1");
    if (degree < 1) throw std::invalid_argument("plan: degree must be at least 1");
    std::vector<ConstructionPlan> out;

    if (degree >= order - 1)
        out.push_back({Family::complete, order, 0, order, order - 1,
                       static_cast<std::uint32_t>(order >= 2 ? 1 : 0)});

    for (std::uint64_t a = 2; 8 * a * 3 <= order; ++a) {
        if (order % (8 * a)) continue;
        std::uint64_t b = order / (8 * a);
        if (b < 3) continue;
        std::uint64_t pred = 4 * a + b - 2;
        if (pred <= degree) out.push_back({Family::kkg8, a, b, order, pred, 2});
    }

    if (order % 8 == 0) {
        std::uint64_t n = order / 8;
        if (n >= 3 && n + 2 <= degree) out.push_back({Family::kg8, n, 0, order, n + 2, 2});
    }

    add_brown_candidates(out, order, degree);

    std::uint64_t t = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order)));
    while (t * t > order) --t;
    while ((t + 1) * (t + 1) <= order) ++t;
    if (t * t == order && t >= 2 && 2 * t <= degree) out.push_back({Family::de_bruijn, t, 2, order, 2 * t, 2});

    std::sort(out.begin(), out.end(),
              [](const ConstructionPlan& x, const ConstructionPlan& y) { return plan_key(x) < plan_key(y); });
    return out;
}

CertifiedPlan realize_and_certify(const ConstructionPlan& p) {
    if (p.predicted_order > kMaxOrder)
        throw limit_error("plan too large to realize: order " + std::to_string(p.predicted_order));

    auto duplicated = [&](Graph base) {
        DuplicationPlan d;
        d.target = lowest_min_degree_vertex(base);
        d.copies = static_cast<std::uint32_t>(p.p2);
        d.clique = false;
        return duplicate_vertices(base, d);
    };

    CertifiedPlan out;
    switch (p.family) {
        case Family::complete: out.graph = complete(static_cast<std::uint32_t>(p.p1)); break;
        case Family::kkg8:
            out.graph = kkg8(static_cast<std::uint32_t>(p.p1), static_cast<std::uint32_t>(p.p2));
            break;
        case Family::kg8: out.graph = kg8(static_cast<std::uint32_t>(p.p1)); break;
        case Family::brown_field_dup: out.graph = duplicated(brown_field(static_cast<std::uint32_t>(p.p1))); break;
        case Family::brown_ring_dup: out.graph = duplicated(brown_ring(static_cast<std::uint32_t>(p.p1))); break;
        case Family::de_bruijn:
            out.graph = de_bruijn_undirected(static_cast<std::uint32_t>(p.p1), static_cast<std::uint32_t>(p.p2));
            break;
    }
    out.metrics = compute_metrics(out.graph);
    out.pass = out.metrics.order == p.predicted_order &&
               out.metrics.degrees.max_degree <= p.predicted_degree &&
               out.metrics.diameter.has_value() && *out.metrics.diameter == p.predicted_diameter;
    return out;
}

std::vector<TableRow> best_order_table(std::uint64_t max_degree) {
    if (max_degree < 2) throw std::invalid_argument("table: max degree must be at least 2");
    if (max_degree > kMaxModulus)
        throw limit_error("table: max degree above " + std::to_string(kMaxModulus) + " unsupported");

    std::vector<TableRow> rows;
    for (std::uint64_t deg = 2; deg <= max_degree; ++deg) {
        std::vector<ConstructionPlan> cands;
        cands.push_back({Family::complete, deg + 1, 0, deg + 1, deg, deg + 1 >= 2 ? 1u : 0u});
        for (std::uint64_t a = 2; 4 * a + 3 <= deg + 2; ++a) {
            std::uint64_t b = deg + 2 - 4 * a;
            cands.push_back({Family::kkg8, a, b, 8 * a * b, deg, 2});
        }
        if (deg >= 5) cands.push_back({Family::kg8, deg - 2, 0, 8 * (deg - 2), deg, 2});
        for (std::uint64_t q = 2; q + 1 <= deg && q <= kMaxModulus; ++q) {
            if (!is_prime_power(q)) continue;
            std::uint64_t delta = deg - (q + 1);
            cands.push_back({Family::brown_field_dup, q, delta, q * q + q + 1 + delta, deg, 2});
        }
        for (std::uint64_t n = 2; n <= kMaxModulus; ++n) {
            if (is_prime(n)) continue;
            std::uint64_t bdeg = brown_ring_degree(n);
            if (bdeg > deg) continue;
            std::uint64_t delta = deg - bdeg;
            cands.push_back({Family::brown_ring_dup, n, delta, brown_ring_order(n) + delta, deg, 2});
        }
        if (deg >= 4) {
            std::uint64_t t = deg / 2;
            cands.push_back({Family::de_bruijn, t, 2, t * t, 2 * t, 2});
        }

        const ConstructionPlan* best = nullptr;
        for (const ConstructionPlan& c : cands)
            if (!best || c.predicted_order > best->predicted_order ||
                (c.predicted_order == best->predicted_order && family_rank(c.family) < family_rank(best->family)))
                best = &c;
        rows.push_back({deg, best->predicted_order, *best});
    }
    return rows;
}

}  // namespace ordeg
