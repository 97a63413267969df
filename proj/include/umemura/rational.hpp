#pragma once

#include <gmpxx.h>

#include <string>

namespace umemura {

// Exact rational coefficients. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as raw mpq construction is followed by
// canonicalize(), which rat() guarantees.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rat_pow(const Rational& base, unsigned long exp) {
    Rational r = 1;
    Rational b = base;
    unsigned long e = exp;
    while (e > 0) {
        if (e & 1UL) r *= b;
        b *= b;
        e >>= 1UL;
    }
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace umemura
