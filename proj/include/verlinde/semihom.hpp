#pragma once

#include <optional>
#include <stdexcept>

#include "verlinde/nslattice.hpp"
#include "verlinde/numeric.hpp"

namespace verlinde {

// Rational triple P = (u, v, h) determining a semihomogeneous bundle W(P).
struct Triple {
    Rat u, v, h;

    friend bool operator==(const Triple&, const Triple&) = default;
};

inline NsClass triple_to_class(const Triple& P) { return {P.u, P.v, P.h}; }

inline Rat det_triple(const Triple& P) { return P.u * P.v + P.h * P.h; }

// Least positive r with r*u, r*v, r*det(P) integral (r*h is then forced
// integral as well, since (rh)^2 = r * (r det) - (ru)(rv)).
inline Int rank_triple(const Triple& P) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    return lcm(lcm(denominator(P.u), denominator(P.v)),
               denominator(det_triple(P)));
}

inline Int euler_triple(const Triple& P) {
    return rat_to_int(Rat(rank_triple(P)) * det_triple(P));
}

inline bool is_admissible(const Triple& P) {
    return rank_triple(P) % 2 != 0 && euler_triple(P) % 2 != 0;
}

inline Triple invert_triple(const Triple& P) {
    Rat d = det_triple(P);
    if (d == 0) throw std::domain_error("invert_triple: det P = 0");
    return {P.u / d, P.v / d, -P.h / d};
}

// Fourier-Mukai dual of W(P) is W(P^{-1}).
inline Triple fm_dual_triple(const Triple& P) { return invert_triple(P); }

struct SemihomInvariants {
    Int w_rank;       // rank W(P) = r(P)^2
    Int w_euler;      // chi(W(P)) = chi(P)^2
    Int sigma_order;  // #Sigma(W(P)) = r(P)^4
    Int k_order;      // #K(W(P)) = chi(P)^4
    int index;        // 2 if det > 0; 0 if det < 0, u > 0; 4 if det < 0, u < 0
    // With ranks kept positive, chi(P^{-1}) = r(P) only up to sign when
    // det P < 0; the flag marks triples where the signed convention bites.
    bool negative_det = false;
};

inline SemihomInvariants semihom_invariants(const Triple& P) {
    if (!is_admissible(P))
        throw std::domain_error("semihom_invariants: triple not admissible");
    Int r = rank_triple(P);
    Int chi = euler_triple(P);
    Rat d = det_triple(P);
    SemihomInvariants out;
    out.w_rank = sq(r);
    out.w_euler = sq(chi);
    out.sigma_order = sq(sq(r));
    out.k_order = sq(sq(chi));
    out.negative_det = d < 0;
    if (d > 0)
        out.index = 2;
    else
        out.index = (P.u > 0) ? 0 : 4;
    return out;
}

// W(P) = W_{a,b} boxtimes W_{c,d}^dagger (x) P^h when h is an integer,
// u = b/a and v = d/c in lowest terms, with a, c odd, positive and coprime.
struct TripleFactorization {
    Int a, b, c, d, h;
};

inline std::optional<TripleFactorization> factorize_triple(const Triple& P) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (!is_integral(P.h)) return std::nullopt;
    TripleFactorization f;
    f.b = numerator(P.u);
    f.a = denominator(P.u);
    f.d = numerator(P.v);
    f.c = denominator(P.v);
    f.h = numerator(P.h);
    if (f.a % 2 == 0 || f.c % 2 == 0) return std::nullopt;
    if (gcd(f.a, f.c) != 1) return std::nullopt;
    return f;
}

// Chern-character level check of the pullback identity
// Phi_{rP}^* W(P^{-1}) = O(-r^2 P) (x) C^{chi^2}: the pullback matrix of
// Phi_{rP} sends the coordinates of P^{-1} to -r^2 times those of P.
inline bool pullback_identity_check(const Triple& P) {
    if (!is_admissible(P) || det_triple(P) == 0)
        throw std::domain_error("pullback_identity_check: need admissible P, det != 0");
    Rat r(rank_triple(P));
    NsClass rP{r * P.u, r * P.v, r * P.h};
    Mat3 R = pullback_matrix(circ(phi_matrix(rP)));
    Triple Pinv = invert_triple(P);
    NsClass lhs = mat3_apply(R, triple_to_class(Pinv));
    Rat scale = -r * r;
    return lhs.u == scale * P.u && lhs.v == scale * P.v && lhs.h == scale * P.h;
}

}  // namespace verlinde
