#pragma once

// Exact determinants of small polynomial matrices: cofactor expansion up to
// 4x4, Bareiss fraction-free elimination (exact division at every step)
// above.  Matrices here come from the determinantal representation of the
// generalized polynomials, so entries are fat but dimensions stay small.

#include "poly.hpp"

#include <utility>
#include <vector>

namespace umemura {

struct PolyMatrix {
    int n = 0;
    std::vector<int> labels;  // optional row/col index labels
    std::vector<Poly> e;      // row-major n*n

    explicit PolyMatrix(int size = 0) : n(size), e(static_cast<std::size_t>(size) * size) {}

    Poly& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const Poly& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }
};

namespace detail {

inline Poly det_cofactor(const PolyMatrix& m) {
    const int n = m.n;
    if (n == 0) return poly_const(1);
    if (n == 1) return m.at(0, 0);
    Poly acc;
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0).empty()) continue;
        PolyMatrix minor(n - 1);
        for (int r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (int c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        Poly contrib = mul(m.at(i, 0), det_cofactor(minor));
        acc = (i % 2 == 0) ? add(acc, contrib) : sub(acc, contrib);
    }
    return acc;
}

inline Poly det_bareiss(PolyMatrix m) {
    const int n = m.n;
    int sign = 1;
    Poly prev = poly_const(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).empty()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!m.at(i, k).empty()) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return poly_zero();
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = sub(mul(m.at(k, k), m.at(i, j)), mul(m.at(i, k), m.at(k, j)));
                m.at(i, j) = divide_exact(num, prev);
            }
            m.at(i, k) = poly_zero();
        }
        prev = m.at(k, k);
    }
    Poly d = m.at(n - 1, n - 1);
    return sign == 1 ? d : neg(d);
}

}  // namespace detail

inline Poly det(const PolyMatrix& m) {
    if (m.n <= 4) return detail::det_cofactor(m);
    return detail::det_bareiss(m);
}

}  // namespace umemura
