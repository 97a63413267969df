#pragma once

// Evaluation of quotient-ring classes at a rational z-point without ever
// instantiating a square root: values live in T[W]/(W^2 - c) with c = z^2 + 1,
// stored as u0 + u1*W.  A class is zero iff both components vanish.  T is
// Rational or Zp (anything with +, -, *, ==).

#include <utility>

namespace umemura {

template <class T>
struct Quad {
    T u0;
    T u1;
    T c;  // W^2

    friend Quad operator+(const Quad& a, const Quad& b) { return Quad{a.u0 + b.u0, a.u1 + b.u1, a.c}; }
    friend Quad operator-(const Quad& a, const Quad& b) { return Quad{a.u0 - b.u0, a.u1 - b.u1, a.c}; }
    friend Quad operator*(const Quad& a, const Quad& b) {
        return Quad{a.u0 * b.u0 + a.u1 * b.u1 * a.c, a.u0 * b.u1 + a.u1 * b.u0, a.c};
    }
    friend Quad operator*(const T& s, const Quad& a) { return Quad{s * a.u0, s * a.u1, a.c}; }
    friend Quad operator-(const Quad& a) { return Quad{-a.u0, -a.u1, a.c}; }
    friend bool operator==(const Quad& a, const Quad& b) { return a.u0 == b.u0 && a.u1 == b.u1; }
};

template <class T>
Quad<T> quad_scalar(const T& s, const T& c) {
    return Quad<T>{s, s - s, c};  // s - s: zero of the right field/modulus
}

// w^exp as a Quad: W^(2h+r) = c^h * W^r.
template <class T>
Quad<T> quad_w_pow(int exp, const T& one, const T& c) {
    T acc = one;
    for (int i = 0; i < exp / 2; ++i) acc = acc * c;
    Quad<T> r{acc, one - one, c};
    if (exp % 2 == 1) std::swap(r.u0, r.u1);
    return r;
}

template <class T>
bool quad_is_zero(const Quad<T>& q, const T& zero) {
    return q.u0 == zero && q.u1 == zero;
}

}  // namespace umemura
