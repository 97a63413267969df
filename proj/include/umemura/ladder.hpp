#pragma once

// The X/T gauge ladder.  X is defined by its explicit product formula; the
// tau-style T carries the parameter-shifted family.  The displayed gauge
// multiplies by X itself, but the three-term bilinear sum closes only with
// the reciprocal gauge (the product of Y/Z factors); both are exposed so the
// verifier can demonstrate the discrepancy and the fix.

#include "families.hpp"

namespace umemura {

struct RationalFunction {
    Poly num;
    Poly den;
};

// Ybar_{(l,m)} = (4(b2+l)^2 - (2m+1)^2) w^2.
inline Poly ladder_Ybar(int l, int m) {
    Poly c = scale(pow(add(poly_var(VarB2), poly_const(l)), 2), Rational(4));
    c = sub(c, poly_const(Rational((2L * m + 1) * (2L * m + 1))));
    return mul(c, poly_var(VarW, 2));
}

// Zbar_{(k,m)} = (-4(b1+k)^2 + (2m+1)^2) z^2.
inline Poly ladder_Zbar(int k, int m) {
    Poly c = scale(pow(add(poly_var(VarB1), poly_const(k)), 2), Rational(-4));
    c = add(c, poly_const(Rational((2L * m + 1) * (2L * m + 1))));
    return mul(c, poly_var(VarZ, 2));
}

// Y_{(l,m)}(n) = prod_{j=1..n} Ybar_{(l, m-n-1+2j)}; same shape for Z.
inline Poly ladder_Y(int l, int m, int n) {
    Poly p = poly_const(1);
    for (int j = 1; j <= n; ++j) p = mul(p, ladder_Ybar(l, m - n - 1 + 2 * j));
    return p;
}

inline Poly ladder_Z(int k, int m, int n) {
    Poly p = poly_const(1);
    for (int j = 1; j <= n; ++j) p = mul(p, ladder_Zbar(k, m - n - 1 + 2 * j));
    return p;
}

// The polynomial prod_{j=1}^{k-1} Y_{(l,m)}(j) * prod_{j=1}^{l-1} Z_{(k,m)}(j);
// X(k,l,m) is its reciprocal.
inline Poly ladder_X_denominator(int k, int l, int m) {
    if (k < 0 || l < 0) throw std::invalid_argument("ladder: k, l must be >= 0");
    Poly p = poly_const(1);
    for (int j = 1; j <= k - 1; ++j) p = mul(p, ladder_Y(l, m, j));
    for (int j = 1; j <= l - 1; ++j) p = mul(p, ladder_Z(k, m, j));
    return p;
}

inline RationalFunction ladder_X(int k, int l, int m) {
    return RationalFunction{poly_const(1), ladder_X_denominator(k, l, m)};
}

// Displayed gauge: U_{0,m}(b1+k, b2+l) * X(k,l,m).
inline RationalFunction ladder_T(int k, int l, int m) {
    return RationalFunction{gen_param(0, m, 0, k, l), ladder_X_denominator(k, l, m)};
}

// Reciprocal gauge: U_{0,m}(b1+k, b2+l) * (1/X(k,l,m)); this is the one that
// satisfies the three-term bilinear sum.
inline Poly ladder_T_balanced(int k, int l, int m) {
    return mul(gen_param(0, m, 0, k, l), ladder_X_denominator(k, l, m));
}

}  // namespace umemura
