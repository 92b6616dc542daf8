#pragma once

#include <cstdint>
#include <numeric>

#include "verlinde/numeric.hpp"

namespace verlinde {

// Vector (r, k*Theta, chi) on a principally polarized abelian surface.
struct MukaiVector {
    long long r = 0;
    long long k = 0;
    long long chi = 0;

    friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

// Mukai pairing <v,w> = 2kk' - r*chi' - r'*chi; self-pairing is 2*d_v.
inline Int mukai_pairing(const MukaiVector& v, const MukaiVector& w) {
    return Int(2) * v.k * w.k - Int(v.r) * w.chi - Int(w.r) * v.chi;
}

inline Int dim_invariant(const MukaiVector& v) {
    return Int(v.k) * v.k - Int(v.r) * v.chi;
}

// Orthogonality in the strange-duality sense: chi(v (x) w) = 0, i.e.
// r*chi' + r'*chi + 2kk' = 0. Equivalent to <v, dual(w)> = 0. All the exact
// identities below (slope determinant, t^2 identity, theta class transport)
// hold under this condition.
inline bool is_orthogonal(const MukaiVector& v, const MukaiVector& w) {
    return Int(v.r) * w.chi + Int(w.r) * v.chi + Int(2) * v.k * w.k == 0;
}

inline bool is_primitive(const MukaiVector& v) {
    return std::gcd(std::gcd(v.r, v.k), v.chi) == 1;
}

inline MukaiVector twist(const MukaiVector& v, long long ell) {
    return {v.r, v.k + v.r * ell, v.chi + 2 * v.k * ell + v.r * ell * ell};
}

inline MukaiVector dual(const MukaiVector& v) { return {v.r, -v.k, v.chi}; }

// Convention: middle-entry sign fixed so that dual(fm_transform((r,k,1)))
// has the shape (1, k, r).
inline MukaiVector fm_transform(const MukaiVector& v) {
    return {v.chi, -v.k, v.r};
}

struct AssumptionReport {
    bool primitive_v = false;
    bool primitive_w = false;
    bool d_v_odd_positive = false;
    bool d_w_odd_positive = false;
    bool orthogonal = false;
    bool t_positive = false;   // t = rk' + r'k > 0, i.e. c1(v (x) w) > 0
    bool s_negative = false;   // s = chi*k' + chi'*k < 0
    bool pairing_identity = false;  // t*s + (r*chi' + kk')^2 = -d_v*d_w
    bool t_identity = false;        // r'^2 d_v + r^2 d_w = t^2
    // Sufficient slope bound for higher-cohomology vanishing in the rank-1
    // shape v=(1,0,-n), w=(h,k,nh); absent when the shape does not apply.
    bool rank1_shape = false;
    bool rank1_slope_bound = false;

    bool all_core_pass() const {
        return primitive_v && primitive_w && d_v_odd_positive &&
               d_w_odd_positive && orthogonal && t_positive && s_negative &&
               pairing_identity && t_identity;
    }
};

inline AssumptionReport check_assumptions(const MukaiVector& v, const MukaiVector& w) {
    AssumptionReport rep;
    const Int dv = dim_invariant(v), dw = dim_invariant(w);
    const Int t = Int(v.r) * w.k + Int(w.r) * v.k;
    const Int s = Int(v.chi) * w.k + Int(w.chi) * v.k;
    rep.primitive_v = is_primitive(v);
    rep.primitive_w = is_primitive(w);
    rep.d_v_odd_positive = dv > 0 && dv % 2 != 0;
    rep.d_w_odd_positive = dw > 0 && dw % 2 != 0;
    rep.orthogonal = is_orthogonal(v, w);
    rep.t_positive = t > 0;
    rep.s_negative = s < 0;
    rep.pairing_identity =
        t * s + sq(Int(v.r) * w.chi + Int(v.k) * w.k) == -dv * dw;
    rep.t_identity = Int(w.r) * w.r * dv + Int(v.r) * v.r * dw == t * t;
    if (v.r == 1 && v.k == 0 && v.chi < 0) {
        long long n = -v.chi;
        if (w.r >= 1 && w.chi == n * w.r) {
            rep.rank1_shape = true;
            rep.rank1_slope_bound = w.k >= w.r * (n + 2);
        }
    }
    return rep;
}

}  // namespace verlinde
