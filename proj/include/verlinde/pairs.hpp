#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "verlinde/mukai.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde {

struct PairVW {
    MukaiVector v, w;
};

// Degree-0 family: v = (r, 0, chi) with r odd positive, chi odd negative,
// gcd(r, |chi|) = 1, and w = (rh, k, -chi h) with h, k >= 1, gcd(h, k) = 1
// (primitivity), k + h odd (d_w odd), d_w = k^2 + r chi h^2 >= 1.
// Enumerates all such pairs with d_v + d_w <= max_sum, h <= h_cap, k <= k_cap.
inline std::vector<PairVW> degree0_pairs(long long max_sum, long long h_cap = 10,
                                         long long k_cap = 50) {
    std::vector<PairVW> out;
    for (long long r = 1; r < max_sum; r += 2) {
        for (long long c = 1; c < max_sum; c += 2) {
            if (std::gcd(r, c) != 1) continue;
            long long d_v = r * c;
            if (d_v + 1 > max_sum) continue;
            for (long long h = 1; h <= h_cap; ++h) {
                for (long long k = 1; k <= k_cap; ++k) {
                    if ((k + h) % 2 == 0 || std::gcd(h, k) != 1) continue;
                    long long d_w = k * k - d_v * h * h;
                    if (d_w < 1 || d_v + d_w > max_sum) continue;
                    out.push_back({{r, 0, -c}, {r * h, k, c * h}});
                }
            }
        }
    }
    return out;
}

inline PairVW random_degree0_pair(std::mt19937_64& rng, long long max_sum = 60) {
    auto pool = degree0_pairs(max_sum);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

// General orthogonal pairs, obtained from the degree-0 family by opposite
// twists (which preserve orthogonality, the dimensions and primitivity).
inline PairVW random_orthogonal_pair(std::mt19937_64& rng, long long max_sum = 60,
                                     long long ell_range = 4) {
    PairVW p = random_degree0_pair(rng, max_sum);
    std::uniform_int_distribution<long long> ell(-ell_range, ell_range);
    long long l = ell(rng);
    return {twist(p.v, -l), twist(p.w, l)};
}

}  // namespace verlinde
