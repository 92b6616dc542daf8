#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verlinde/numeric.hpp"

namespace verlinde {

using std::int64_t;

inline int64_t gcd3(int64_t a, int64_t b, int64_t c) {
    return std::gcd(a, std::gcd(b, c));
}

inline int64_t lcm_ll(int64_t a, int64_t b) { return std::lcm(a, b); }

// Prime factorization of n >= 1 by trial division; desk-scale inputs only.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    if (n < 1) throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int mobius(int64_t n) {
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp--) r *= base;
    return r;
}

// Exact binomial coefficient, multiply-then-divide with big integers.
inline Int binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int num = 1;
    for (int64_t i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return num;
}

// ---------------------------------------------------------------------------
// Congruence pairs and torsion-solution counting.
// ---------------------------------------------------------------------------

struct CongruenceInstance {
    int64_t a = 0, b = 0, c = 0, d = 1;

    bool coprime_hypothesis() const {
        return std::gcd(std::gcd(a, b), std::gcd(c, d)) == 1;
    }
    bool square_congruence() const {
        return d >= 1 && (b * b - a * c) % d == 0;
    }
    // gcd(a, c, d, (b^2 - ac)/d) = 1, only meaningful when square_congruence holds.
    bool counting_hypothesis() const {
        if (!square_congruence()) return false;
        int64_t q = (b * b - a * c) / d;
        return std::gcd(gcd3(a, c, d), q) == 1;
    }
};

namespace detail {
// Extended gcd: returns g >= 0 with a*x + b*y = g.
inline int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    int64_t x1, y1;
    int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline int64_t mod_pos(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace detail

// Constructive solver for: find coprime (m, n) with c*m = b*n and b*m = a*n mod d,
// given gcd(a,b,c,d) = 1 and b^2 = ac mod d. The pair n = (b,c,d), m = (a,b,d)*m'
// with m' from a Bezout relation b*B + c*C + d*D = (b,c,d) works after at most a
// bounded scan over offsets of d/(b,ac,d) securing gcd(m', (b,c,d)) = 1. The
// returned pair is always re-verified.
inline std::pair<int64_t, int64_t> solve_congruence_pair(const CongruenceInstance& in) {
    if (!in.coprime_hypothesis())
        throw std::domain_error("solve_congruence_pair: gcd(a,b,c,d) != 1");
    if (!in.square_congruence())
        throw std::domain_error("solve_congruence_pair: b^2 != ac mod d");

    const int64_t a = in.a, b = in.b, c = in.c, d = in.d;
    const int64_t n = gcd3(b, c, d);
    const int64_t g_abd = gcd3(a, b, d);
    const int64_t step = d / std::gcd(std::gcd(b, a * c), d);

    // Bezout: b*B + c*C + d*D = (b,c,d).
    int64_t B0, C0;
    int64_t g_bc = detail::ext_gcd(b, c, B0, C0);
    int64_t s, D;
    detail::ext_gcd(g_bc, d, s, D);
    int64_t B = s * B0, C = s * C0;

    // (a,b,d) divides both aB and bC.
    int64_t m0 = detail::mod_pos((b * C + a * B) / g_abd, step == 0 ? 1 : step);

    auto verify = [&](int64_t m, int64_t nn) {
        return (c * m - b * nn) % d == 0 && (b * m - a * nn) % d == 0 &&
               std::gcd(m, nn) == 1;
    };

    for (int64_t t = 0; t <= d; ++t) {
        int64_t mp = m0 + t * step;
        if (std::gcd(mp, n) != 1) continue;
        int64_t m = g_abd * mp;
        if (verify(m, n)) return {m, n};
    }
    throw std::runtime_error("solve_congruence_pair: construction exhausted (internal)");
}

// Solutions (x, y) in (Z/d)^2 of a*x = b*y, c*y = b*x. The defining equations
// act coordinate-wise on A[d] = (Z/d)^4, so the count over A[d] x A[d] is the
// fourth power of this per-coordinate count.
inline int64_t count_torsion_solutions_per_coordinate(const CongruenceInstance& in) {
    if (in.d < 1) throw std::domain_error("count: d must be >= 1");
    const int64_t d = in.d;
    int64_t count = 0;
    for (int64_t x = 0; x < d; ++x)
        for (int64_t y = 0; y < d; ++y)
            if ((in.a * x - in.b * y) % d == 0 && (in.c * y - in.b * x) % d == 0)
                ++count;
    return count;
}

inline Int count_torsion_solutions(const CongruenceInstance& in) {
    return pow_int(Int(count_torsion_solutions_per_coordinate(in)), 4);
}

// True when the instance satisfies the counting hypotheses and the brute count
// comes out to d^4. Hypothesis violations are reported as domain errors, kept
// distinct from count mismatches (plain false).
inline bool verify_torsion_count(const CongruenceInstance& in) {
    if (!in.square_congruence())
        throw std::domain_error("verify_torsion_count: b^2 != ac mod d");
    if (!in.counting_hypothesis())
        throw std::domain_error("verify_torsion_count: gcd(a,c,d,(b^2-ac)/d) != 1");
    return count_torsion_solutions(in) == pow_int(Int(in.d), 4);
}

// Per-coordinate solution counts multiply over coprime splittings of d.
inline bool multiplicativity_check(const CongruenceInstance& in, int64_t d1, int64_t d2) {
    if (std::gcd(d1, d2) != 1)
        throw std::domain_error("multiplicativity_check: d1, d2 must be coprime");
    CongruenceInstance i1 = in, i2 = in, i12 = in;
    i1.d = d1;
    i2.d = d2;
    i12.d = d1 * d2;
    return count_torsion_solutions_per_coordinate(i12) ==
           count_torsion_solutions_per_coordinate(i1) *
               count_torsion_solutions_per_coordinate(i2);
}

}  // namespace verlinde
