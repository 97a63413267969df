#pragma once

// High-precision numerics for the differential-equation checks.  Everything
// runs on truncated Taylor jets over MPFR reals: a Jet carries the
// coefficients f(t0)/0!, f'(t0)/1!, ... so every derivative we need falls out
// of exact jet arithmetic (add/mul/div/sqrt), and the only rounding is MPFR's.
// Finite differences appear solely as an independent cross-check.

#include "poly.hpp"
#include "rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace umemura {

using Real = boost::multiprecision::mpfr_float;

// Sets the working decimal precision for all Reals constructed in scope.
class ScopedPrecision {
  public:
    explicit ScopedPrecision(unsigned digits) : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  private:
    unsigned saved_;
};

// Exact-to-rounded promotion: one division's worth of rounding, no decimal
// string detour through a double.
inline Real to_real(const Rational& q) {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

inline Real pow10(long e) {
    Real r = pow(Real(10), static_cast<unsigned>(e < 0 ? -e : e));
    return e < 0 ? Real(1) / r : r;
}

// ---------------------------------------------------------------------------
// Truncated Taylor jets.  c[k] = f^{(k)}(t0) / k!.  The number of coefficients
// is the propagated order bound: combining jets truncates to the shorter one,
// and d/dt drops exactly one slot, so "how many derivatives are still
// trustworthy" is tracked by construction.

struct Jet {
    std::vector<Real> c;

    Jet() = default;
    explicit Jet(std::size_t n) : c(n, Real(0)) {}

    std::size_t size() const { return c.size(); }
};

inline Jet jet_const(const Real& v, std::size_t n) {
    Jet j(n);
    if (n > 0) j.c[0] = v;
    return j;
}

// The independent variable t0 + (t - t0).
inline Jet jet_var(const Real& t0, std::size_t n) {
    Jet j(n);
    if (n > 0) j.c[0] = t0;
    if (n > 1) j.c[1] = 1;
    return j;
}

inline Jet operator+(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Jet r(n);
    for (std::size_t k = 0; k < n; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Jet r(n);
    for (std::size_t k = 0; k < n; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

inline Jet operator-(const Jet& a) {
    Jet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.c[k] = -a.c[k];
    return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Jet r(n);
    for (std::size_t k = 0; k < n; ++k) {
        Real s = 0;
        for (std::size_t i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
        r.c[k] = s;
    }
    return r;
}

inline Jet operator*(const Real& s, const Jet& a) {
    Jet r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.c[k] = s * a.c[k];
    return r;
}

inline Jet operator*(const Jet& a, const Real& s) { return s * a; }

inline Jet operator/(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    Jet r(n);
    if (n == 0) return r;
    if (b.c[0] == 0) throw std::domain_error("jet division by zero constant term");
    for (std::size_t k = 0; k < n; ++k) {
        Real s = a.c[k];
        for (std::size_t i = 0; i < k; ++i) s -= r.c[i] * b.c[k - i];
        r.c[k] = s / b.c[0];
    }
    return r;
}

inline Jet operator/(const Jet& a, const Real& s) { return a * (Real(1) / s); }

inline Jet operator+(const Real& s, const Jet& a) { return jet_const(s, a.size()) + a; }
inline Jet operator+(const Jet& a, const Real& s) { return s + a; }
inline Jet operator-(const Real& s, const Jet& a) { return jet_const(s, a.size()) - a; }
inline Jet operator-(const Jet& a, const Real& s) { return a + (-s); }

inline Jet jet_sqrt(const Jet& a) {
    const std::size_t n = a.size();
    Jet r(n);
    if (n == 0) return r;
    if (a.c[0] <= 0) throw std::domain_error("jet sqrt needs a positive constant term");
    r.c[0] = sqrt(a.c[0]);
    for (std::size_t k = 1; k < n; ++k) {
        Real s = a.c[k];
        for (std::size_t i = 1; i < k; ++i) s -= r.c[i] * r.c[k - i];
        r.c[k] = s / (2 * r.c[0]);
    }
    return r;
}

// d/dt: one order is spent.
inline Jet jet_derivative(const Jet& a) {
    if (a.size() == 0) return Jet(0);
    Jet r(a.size() - 1);
    for (std::size_t k = 0; k + 1 < a.size(); ++k) r.c[k] = Real(k + 1) * a.c[k + 1];
    return r;
}

inline Real jet_value(const Jet& a) { return a.size() > 0 ? a.c[0] : Real(0); }

// f^{(k)}(t0) = k! c[k].
inline Real jet_deriv(const Jet& a, std::size_t k) {
    if (k >= a.size()) throw std::out_of_range("jet order exhausted");
    Real f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= static_cast<unsigned>(i);
    return f * a.c[k];
}

// ---------------------------------------------------------------------------
// The t -> (v, z, w) bridge: v = (2t-1)/sqrt(t(t-1)), z = sqrt((v-2)/4),
// w = sqrt((v+2)/4), all on the positive branch for t > 1 (there w^2-z^2 = 1
// and 4z^2w^2 = (v^2-4)/4 = 1/(4t(t-1)) stays finite and positive).

struct Bridge {
    Jet t, v, z, w;
};

inline Bridge t_bridge_jets(const Rational& t0, std::size_t order_plus_1) {
    if (t0 <= 1) throw std::domain_error("t must be > 1");
    Bridge b;
    b.t = jet_var(to_real(t0), order_plus_1);
    const Jet s = b.t * (b.t - Real(1));
    b.v = (Real(2) * b.t - Real(1)) / jet_sqrt(s);
    b.z = jet_sqrt((b.v - Real(2)) / Real(4));
    b.w = jet_sqrt((b.v + Real(2)) / Real(4));
    return b;
}

// ---------------------------------------------------------------------------
// Central finite differences with one Richardson step; the independent check
// used against jet-computed derivatives.  F is Real -> Real.

// The explicit -> Real on the stencil lambdas matters: MPFR operator
// expressions hold references to their operands, so a deduced return type
// would dangle once the stencil's temporaries die.
template <class F>
Real fd_first(F&& f, const Real& t0, const Real& h) {
    auto d = [&](const Real& hh) -> Real { return (f(t0 + hh) - f(t0 - hh)) / (2 * hh); };
    return (4 * d(h / 2) - d(h)) / 3;  // error h^2 -> h^4
}

template <class F>
Real fd_second(F&& f, const Real& t0, const Real& h) {
    auto d = [&](const Real& hh) -> Real {
        return (f(t0 + hh) - 2 * f(t0) + f(t0 - hh)) / (hh * hh);
    };
    return (4 * d(h / 2) - d(h)) / 3;
}

template <class F>
Real fd_third(F&& f, const Real& t0, const Real& h) {
    auto d = [&](const Real& hh) -> Real {
        return (f(t0 + 2 * hh) - 2 * f(t0 + hh) + 2 * f(t0 - hh) - f(t0 - 2 * hh)) /
               (2 * hh * hh * hh);
    };
    return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace umemura
