#pragma once

// Canonical representatives in Q[z,w,a,b,b1,b2,v]/(w^2 - z^2 - 1).  A class is
// stored as p0 + w*p1 with both parts w-free; the relation comes from the
// substitution z = sinh(x/2), w = cosh(x/2) behind the Hirota identities, and
// every section-4 identity check equates classes here rather than free polys.

#include "poly.hpp"

#include <vector>

namespace umemura {

struct ReducedPoly {
    Poly p0;  // w-exponent 0 part
    Poly p1;  // coefficient of w

    bool operator==(const ReducedPoly&) const = default;
};

namespace detail {
// Row h of Pascal's triangle, cached: binomial(h, l).
inline const std::vector<Rational>& pascal_row(int h) {
    static std::vector<std::vector<Rational>> rows = {{Rational(1)}};
    while (static_cast<int>(rows.size()) <= h) {
        const auto& prev = rows.back();
        std::vector<Rational> next(prev.size() + 1, Rational(1));
        for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[h];
}
}  // namespace detail

// Rewrites w^(2h+r) -> (z^2+1)^h * w^r termwise; the image is canonical.
inline ReducedPoly reduce(const Poly& p) {
    ReducedPoly out;
    for (const auto& [m, c] : p) {
        const int j = m[VarW];
        const int h = j / 2;
        const int parity = j % 2;
        Poly& dst = (parity == 0) ? out.p0 : out.p1;
        const auto& row = detail::pascal_row(h);
        Monomial base = m;
        base[VarW] = 0;
        for (int l = 0; l <= h; ++l) {
            Monomial t = base;
            t[VarZ] += 2 * l;
            add_term(dst, t, c * row[l]);
        }
    }
    return out;
}

inline bool reduced_is_zero(const ReducedPoly& r) { return r.p0.empty() && r.p1.empty(); }

inline Poly to_poly(const ReducedPoly& r) {
    return add(r.p0, mul(poly_var(VarW), r.p1));
}

// reduce is a ring map, so classes of f and g agree iff reduce(f - g) == 0.
inline bool quotient_equal(const Poly& f, const Poly& g) {
    return reduced_is_zero(reduce(sub(f, g)));
}

}  // namespace umemura
