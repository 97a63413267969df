#pragma once

// Partial-fraction coefficients b_lambda^{I,J} for the two-product rational
// identity in x, and the Split building block.  Case split:
//   (i)   lambda != 1, lambda in both:      Split(I,J) + Split(J,I)
//   (ii)  lambda != 1, lambda in I only:    Split(I,J)   (J-only mirrors with I,J swapped)
//   (iii) lambda == 1 in both:              -8 * prod_{I\{1}} (1+l')/(1-l') * prod_{J\{1}} same
//   lambda == 1 in exactly one set: 0 (the 4*lambda*(lambda-1) prefactor vanishes).

#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace umemura {

namespace detail {
inline bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}
}  // namespace detail

inline Rational split_b(const std::vector<int>& I, const std::vector<int>& J, int lambda) {
    if (lambda == 1) throw std::invalid_argument("split_b: lambda must differ from 1");
    if (!detail::contains(I, lambda)) throw std::invalid_argument("split_b: lambda not in I");
    Rational r = rat(4L * lambda * (lambda - 1));
    for (int lp : I) {
        if (lp == lambda) continue;
        r *= rat(lambda + lp, lambda - lp);
    }
    for (int lp : J) {
        if (lambda - 2 + lp == 0) throw std::domain_error("split_b: pole lambda-2+lambda' = 0");
        r *= rat(lambda - 2 - lp, lambda - 2 + lp);
    }
    return r;
}

inline Rational b_lambda(const std::vector<int>& I, const std::vector<int>& J, int lambda) {
    const bool in_i = detail::contains(I, lambda);
    const bool in_j = detail::contains(J, lambda);
    if (!in_i && !in_j) throw std::invalid_argument("b_lambda: lambda not in I union J");
    if (lambda == 1) {
        if (in_i && in_j) {
            Rational r = rat(-8);
            for (int lp : I) {
                if (lp == 1) continue;
                r *= rat(1 + lp, 1 - lp);
            }
            for (int lp : J) {
                if (lp == 1) continue;
                r *= rat(1 + lp, 1 - lp);
            }
            return r;
        }
        return Rational(0);
    }
    if (in_i && in_j) return split_b(I, J, lambda) + split_b(J, I, lambda);
    if (in_i) return split_b(I, J, lambda);
    return split_b(J, I, lambda);
}

}  // namespace umemura
