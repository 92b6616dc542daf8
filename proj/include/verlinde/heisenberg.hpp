#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "verlinde/arith.hpp"
#include "verlinde/numeric.hpp"

namespace verlinde {

// Jordan totient symbol {lambda/h}: with h = prod p_i^{a_i}, the value is 0
// unless prod p_i^{a_i - 1} divides lambda, and otherwise equals
// prod (eps_i - 1/p_i^4) where eps_i = 1 if p_i^{a_i} | lambda, else 0.
// By convention {lambda/1} = 1.
inline Rat jordan_symbol(const Int& lambda, long long h) {
    if (h < 1) throw std::domain_error("jordan_symbol: h must be positive");
    Rat out = 1;
    for (auto [p, e] : factorize(h)) {
        Int pk1 = pow_int(Int(p), static_cast<unsigned>(e - 1));
        if (lambda % pk1 != 0) return 0;
        Int p4 = pow_int(Int(p), 4);
        int eps = (lambda % (pk1 * p) == 0) ? 1 : 0;
        out *= Rat(Int(eps) * p4 - 1, p4);
    }
    return out;
}

// Number of elements of exact order omega in (Z/n)^4, by Moebius inversion.
inline Int count_elements_of_order(long long n, long long omega) {
    if (n < 1 || omega < 1 || n % omega != 0)
        throw std::domain_error("count_elements_of_order: omega must divide n");
    Int total = 0;
    for (long long e : divisors(omega))
        total += Int(mobius(omega / e)) * pow_int(Int(e), 4);
    return total;
}

// Sum of <zeta, pi^{-1}> over elements pi of exact order delta in the group
// prod Z/orders[i], for zeta given componentwise. Computed exactly: the sum
// over the delta'-torsion subgroup is prod gcd(orders[i], delta') when every
// zeta[i] is divisible by gcd(orders[i], delta'), else 0; Moebius inversion
// then isolates the exact order. No floating point anywhere.
inline Int character_sum_at(const std::vector<long long>& orders,
                            const std::vector<long long>& zeta,
                            long long delta) {
    if (orders.size() != zeta.size())
        throw std::domain_error("character_sum_at: size mismatch");
    if (delta < 1) throw std::domain_error("character_sum_at: delta < 1");
    auto subgroup_sum = [&](long long dp) -> Int {
        Int prod = 1;
        for (size_t i = 0; i < orders.size(); ++i) {
            long long g = std::gcd(orders[i], dp);
            if (zeta[i] % g != 0) return 0;
            prod *= g;
        }
        return prod;
    };
    Int total = 0;
    for (long long e : divisors(delta))
        total += Int(mobius(delta / e)) * subgroup_sum(e);
    return total;
}

inline std::vector<long long> torsion_orders(long long a, long long b) {
    return {a, a, a, a, b, b, b, b};
}

// A canonical element of exact order omega in (Z/a)^4 x (Z/b)^4, gcd(a,b)=1.
inline std::vector<long long> canonical_element_of_order(long long a, long long b,
                                                         long long omega) {
    long long wa = std::gcd(omega, a);
    long long wb = std::gcd(omega, b);
    if (wa * wb != omega)
        throw std::domain_error("canonical_element_of_order: omega does not divide ab");
    return {a / wa, 0, 0, 0, b / wb, 0, 0, 0};
}

// Sum over pi of exact order delta in (Z/a)^4 x (Z/b)^4 of <zeta, pi^{-1}>,
// for zeta of exact order omega; the value depends on zeta through omega only
// and equals delta^4 * {(ab/omega)/delta}.
inline Int character_sum(long long a, long long b, long long omega, long long delta) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::domain_error("character_sum: a, b must be coprime positive");
    if ((a * b) % delta != 0)
        throw std::domain_error("character_sum: delta must divide ab");
    return character_sum_at(torsion_orders(a, b),
                            canonical_element_of_order(a, b, omega), delta);
}

struct HeisenbergIrrepData {
    Int count;         // h^4 irreps with central weight k, h = gcd(k, n)
    Int dim;           // each of dimension (n/h)^2
    Int multiplicity;  // each appearing (k/h)^2 times in H^0(A, Theta^{kn})
};

inline HeisenbergIrrepData heisenberg_irrep_data(long long n, long long k) {
    if (n < 1) throw std::domain_error("heisenberg_irrep_data: n must be positive");
    long long h = std::gcd(k, n);
    if (h == 0) h = n;
    return {pow_int(Int(h), 4), sq(Int(n / h)), sq(Int(k / h))};
}

}  // namespace verlinde
