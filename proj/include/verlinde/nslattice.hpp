#pragma once

#include <array>
#include <stdexcept>

#include "verlinde/mukai.hpp"
#include "verlinde/numeric.hpp"

namespace verlinde {

// Class u*Theta + v*ThetaHat + h*P on A x Ahat, coordinates exact rationals.
struct NsClass {
    Rat u, v, h;

    friend bool operator==(const NsClass&, const NsClass&) = default;
};

inline bool is_line_bundle_class(const NsClass& L) {
    return is_integral(L.u) && is_integral(L.v) && is_integral(L.h);
}

// The quartic Euler form Q(u,v,h) = (uv + h^2)^2; every chi and degree
// computation on the lattice factors through it.
inline Rat quartic_form(const NsClass& L) {
    Rat q = L.u * L.v + L.h * L.h;
    return q * q;
}

inline Int euler_char(const NsClass& L) {
    if (!is_line_bundle_class(L))
        throw std::domain_error("euler_char: non-integral class");
    return rat_to_int(quartic_form(L));
}

// 2x2 integer matrix defining the isogeny rho_M of A x Ahat.
struct IsogenyMatrix {
    long long a = 1, b = 0, c = 0, d = 1;

    Int det() const { return Int(a) * d - Int(b) * c; }

    friend bool operator==(const IsogenyMatrix&, const IsogenyMatrix&) = default;
};

// The ° operation: negate the b entry. Phi_P = rho_{(P~)°} and
// Psi_v = rho_{(V)°}, so pullback matrices of these isogenies are built from
// the circ'd 2x2 matrix.
inline IsogenyMatrix circ(const IsogenyMatrix& M) {
    return {M.a, -M.b, M.c, M.d};
}

inline IsogenyMatrix compose(const IsogenyMatrix& M, const IsogenyMatrix& N) {
    return {M.a * N.a + M.b * N.c, M.a * N.b + M.b * N.d,
            M.c * N.a + M.d * N.c, M.c * N.b + M.d * N.d};
}

using Mat3 = std::array<std::array<Rat, 3>, 3>;

inline Mat3 mat3_identity() {
    Mat3 I{};
    for (int i = 0; i < 3; ++i) I[i][i] = 1;
    return I;
}

inline Mat3 mat3_mul(const Mat3& A, const Mat3& B) {
    Mat3 C{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) C[i][j] += A[i][k] * B[k][j];
    return C;
}

inline NsClass mat3_apply(const Mat3& A, const NsClass& x) {
    return {A[0][0] * x.u + A[0][1] * x.v + A[0][2] * x.h,
            A[1][0] * x.u + A[1][1] * x.v + A[1][2] * x.h,
            A[2][0] * x.u + A[2][1] * x.v + A[2][2] * x.h};
}

inline Rat mat3_det(const Mat3& A) {
    return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
           A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
           A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

// Action of rho_M^* on {Theta, ThetaHat, P} coordinates (columns).
inline Mat3 pullback_matrix(const IsogenyMatrix& M) {
    const Rat a = M.a, b = M.b, c = M.c, d = M.d;
    return {{{a * a, -c * c, 2 * a * c},
             {-b * b, d * d, 2 * b * d},
             {-a * b, -c * d, a * d - b * c}}};
}

inline Mat3 pullback_matrix_inverse(const IsogenyMatrix& M) {
    const Int s = Int(M.a) * M.d + Int(M.b) * M.c;
    if (s == 0)
        throw std::domain_error("pullback_matrix_inverse: ad + bc = 0");
    const Rat f(Int(1), s * s);
    const Rat a = M.a, b = M.b, c = M.c, d = M.d;
    return {{{f * d * d, -f * c * c, -2 * f * c * d},
             {-f * b * b, f * a * a, -2 * f * a * b},
             {f * b * d, f * a * c, f * (a * d - b * c)}}};
}

// P~ = [[h, -v], [u, h]] for an integral triple; det P~ = det P.
inline IsogenyMatrix phi_matrix(const NsClass& P) {
    if (!is_line_bundle_class(P))
        throw std::domain_error("phi_matrix: non-integral class");
    long long u = static_cast<long long>(rat_to_int(P.u));
    long long v = static_cast<long long>(rat_to_int(P.v));
    long long h = static_cast<long long>(rat_to_int(P.h));
    return {h, -v, u, h};
}

// V = [[-chi, -k], [k, r]]; det V = d_v.
inline IsogenyMatrix psi_matrix(const MukaiVector& v) {
    return {-v.chi, -v.k, v.k, v.r};
}

// Degree of rho_{M°}: the multiplier of rho_N is N.a*N.d + N.b*N.c, which for
// N = M° equals det M, and an isogeny of the 4-fold with multiplier s has
// degree s^4. Phi_P and Psi_v pass their un-circ'd matrices P~ and V here, so
// their degrees come out as (det P)^4 and d_v^4.
inline Int isogeny_degree(const IsogenyMatrix& M) {
    Int d = M.det();
    if (d == 0) throw std::domain_error("isogeny_degree: singular matrix");
    return sq(sq(d));
}

// Coordinates of the theta class of the Hilbert-scheme factor in the ordered
// basis {Theta_(n), M, ThetaHat, (a,1)*P}, for F of type (r', k'Theta, chi').
inline std::array<long long, 4> hilbert_theta_coords(const MukaiVector& w,
                                                     long long /*n*/) {
    return {w.k, w.r, -w.k, w.r};
}

}  // namespace verlinde
