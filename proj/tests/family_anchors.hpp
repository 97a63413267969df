#pragma once

// Frozen expected values shared by the unit tests and the acceptance runner.
// Each builder spells out the printed expression factor-by-factor; nothing
// here calls the family constructors under test.

#include "umemura/poly.hpp"

namespace anchors {

using umemura::Monomial;
using umemura::Poly;
using umemura::Rational;
using umemura::Var;

inline Poly vlin(Var v, long c) {
    return umemura::add(umemura::poly_var(v), umemura::poly_const(c));
}

inline Poly zw(int ze, int we) {
    Monomial m = umemura::kMonoOne;
    m[umemura::VarZ] = ze;
    m[umemura::VarW] = we;
    return umemura::poly_mono(m, Rational(1));
}

inline Poly term(const Poly& coeff, int ze, int we, long scalar = 1) {
    return umemura::scale(umemura::mul(coeff, zw(ze, we)), Rational(scalar));
}

// (b+1)w^2 - (a+1)z^2
inline Poly gen010() {
    using namespace umemura;
    return add(term(vlin(VarB, 1), 0, 2), term(vlin(VarA, 1), 2, 0, -1));
}

// (b+1)^2(b+9)w^6 - 3(a+1)(b+1)(b+9)z^2w^4 + 3(a+1)(a+9)(b+1)z^4w^2 - (a+1)^2(a+9)z^6
inline Poly gen020() {
    using namespace umemura;
    const Poly a1 = vlin(VarA, 1), a9 = vlin(VarA, 9);
    const Poly b1 = vlin(VarB, 1), b9 = vlin(VarB, 9);
    Poly p = term(mul(mul(b1, b1), b9), 0, 6);
    p = add(p, term(mul(a1, mul(b1, b9)), 2, 4, -3));
    p = add(p, term(mul(mul(a1, a9), b1), 4, 2, 3));
    p = add(p, term(mul(mul(a1, a1), a9), 6, 0, -1));
    return p;
}

// b(b+1)w^3 + 3a(b+1)zw^2 + 3(a+1)bz^2w + a(a+1)z^3
inline Poly gen200() {
    using namespace umemura;
    const Poly a = poly_var(VarA), b = poly_var(VarB);
    const Poly a1 = vlin(VarA, 1), b1 = vlin(VarB, 1);
    Poly p = term(mul(b, b1), 0, 3);
    p = add(p, term(mul(a, b1), 1, 2, 3));
    p = add(p, term(mul(a1, b), 2, 1, 3));
    p = add(p, term(mul(a, a1), 3, 0));
    return p;
}

// 3(b+1)w^2 + 3(a+1)z^2
inline Poly gen201() {
    using namespace umemura;
    return add(term(vlin(VarB, 1), 0, 2, 3), term(vlin(VarA, 1), 2, 0, 3));
}

// b^2(b+4)w^4 + 2ab(b+4)zw^3 - 2ab(a+4)z^3w - a^2(a+4)z^4
inline Poly gen110() {
    using namespace umemura;
    const Poly a = poly_var(VarA), b = poly_var(VarB);
    const Poly a4 = vlin(VarA, 4), b4 = vlin(VarB, 4);
    Poly p = term(mul(mul(b, b), b4), 0, 4);
    p = add(p, term(mul(mul(a, b), b4), 1, 3, 2));
    p = add(p, term(mul(mul(a, b), a4), 3, 1, -2));
    p = add(p, term(mul(mul(a, a), a4), 4, 0, -1));
    return p;
}

// (c+1)z + (d+1)w with c in the a-slot, d in the b-slot.
inline Poly noou2() {
    using namespace umemura;
    return add(term(vlin(VarA, 1), 1, 0), term(vlin(VarB, 1), 0, 1));
}

// (d+1)^2(d+9)w^3 + 3(c+1)(d+1)(d+9)zw^2 + 3(c+1)(c+9)(d+1)z^2w + (c+1)^2(c+9)z^3
inline Poly noou3() {
    using namespace umemura;
    const Poly c1 = vlin(VarA, 1), c9 = vlin(VarA, 9);
    const Poly d1 = vlin(VarB, 1), d9 = vlin(VarB, 9);
    Poly p = term(mul(mul(d1, d1), d9), 0, 3);
    p = add(p, term(mul(c1, mul(d1, d9)), 1, 2, 3));
    p = add(p, term(mul(mul(c1, c9), d1), 2, 1, 3));
    p = add(p, term(mul(mul(c1, c1), c9), 3, 0));
    return p;
}

// 1/4 - (b1^2 + b2^2)/2 + (b1^2 - b2^2)v/4
inline Poly toda2() {
    using namespace umemura;
    Poly p = poly_const(umemura::rat(1, 4));
    p = add(p, poly_var(VarB1, 2, umemura::rat(-1, 2)));
    p = add(p, poly_var(VarB2, 2, umemura::rat(-1, 2)));
    Monomial m1 = kMonoOne;
    m1[VarB1] = 2;
    m1[VarV] = 1;
    add_term(p, m1, umemura::rat(1, 4));
    Monomial m2 = kMonoOne;
    m2[VarB2] = 2;
    m2[VarV] = 1;
    add_term(p, m2, umemura::rat(-1, 4));
    return p;
}

// (1 - 4b2^2)w^2 - (1 - 4b1^2)z^2
inline Poly param010() {
    using namespace umemura;
    const Poly cb2 = add(poly_const(1), poly_var(VarB2, 2, Rational(-4)));
    const Poly cb1 = add(poly_const(1), poly_var(VarB1, 2, Rational(-4)));
    return add(term(cb2, 0, 2), term(cb1, 2, 0, -1));
}

// b*w*((b+1)w^2 + 3z^2) evaluated at b = -4*b2^2.
inline Poly eq45_20() {
    using namespace umemura;
    const Poly b = poly_var(VarB);
    const Poly body = mul(b, mul(poly_var(VarW), add(term(vlin(VarB, 1), 0, 2), term(poly_const(3), 2, 0))));
    return substitute(body, {{VarB, poly_var(VarB2, 2, Rational(-4))}});
}

}  // namespace anchors
