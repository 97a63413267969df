#pragma once

// Point evaluation of Poly over an arbitrary coefficient field T (Rational or
// Zp).  Two disciplines: eval_point substitutes every variable directly (free
// ring), eval_quad keeps w symbolic as the generator W of T[W]/(W^2 - c) so
// quotient-ring classes can be compared at rational z-points exactly.
// FR lifts a Rational coefficient into T.  Per-variable power tables keep the
// cost per term at a handful of multiplications even for high degrees.

#include "poly.hpp"
#include "quad.hpp"

#include <array>
#include <vector>

namespace umemura {

namespace detail_pt {

template <class T>
std::array<std::vector<T>, kNumVars> power_tables(const Poly& p, const std::array<T, kNumVars>& x,
                                                  const T& one, bool skip_w) {
    std::array<int, kNumVars> maxdeg{};
    for (const auto& [m, c] : p) {
        (void)c;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] > maxdeg[v]) maxdeg[v] = m[v];
        }
    }
    std::array<std::vector<T>, kNumVars> pows;
    for (int v = 0; v < kNumVars; ++v) {
        if (maxdeg[v] == 0 || (skip_w && v == VarW)) continue;
        pows[v].reserve(maxdeg[v] + 1);
        pows[v].push_back(one);
        for (int e = 1; e <= maxdeg[v]; ++e) pows[v].push_back(pows[v].back() * x[v]);
    }
    return pows;
}

}  // namespace detail_pt

template <class T, class FR>
T eval_point(const Poly& p, const std::array<T, kNumVars>& x, FR fr) {
    const T one = fr(Rational(1));
    const auto pows = detail_pt::power_tables(p, x, one, false);
    T acc = fr(Rational(0));
    for (const auto& [m, c] : p) {
        T t = fr(c);
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] > 0) t = t * pows[v][m[v]];
        }
        acc = acc + t;
    }
    return acc;
}

// x[VarW] is ignored; w enters as W with W^2 = c (callers pass c = z^2 + 1).
template <class T, class FR>
Quad<T> eval_quad(const Poly& p, const std::array<T, kNumVars>& x, const T& c, FR fr) {
    const T zero = fr(Rational(0));
    const T one = fr(Rational(1));
    const auto pows = detail_pt::power_tables(p, x, one, true);
    std::vector<T> cpow{one};
    Quad<T> acc{zero, zero, c};
    for (const auto& [m, coeff] : p) {
        T t = fr(coeff);
        for (int v = 0; v < kNumVars; ++v) {
            if (v == VarW) continue;
            if (m[v] > 0) t = t * pows[v][m[v]];
        }
        const int half = m[VarW] / 2;
        while (static_cast<int>(cpow.size()) <= half) cpow.push_back(cpow.back() * c);
        t = t * cpow[half];
        if (m[VarW] % 2 == 0) {
            acc.u0 = acc.u0 + t;
        } else {
            acc.u1 = acc.u1 + t;
        }
    }
    return acc;
}

}  // namespace umemura
