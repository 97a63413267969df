#pragma once

// Sparse exact multivariate polynomials over the fixed seven-variable alphabet
// (z, w, a, b, b1, b2, v).  Terms live in a std::map under graded-lex order
// (total degree first, then lexicographic on the exponent vector), so the
// canonical form is unique and iteration order is deterministic.

#include "rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace umemura {

inline constexpr int kNumVars = 7;

enum Var : int { VarZ = 0, VarW = 1, VarA = 2, VarB = 3, VarB1 = 4, VarB2 = 5, VarV = 6 };

inline constexpr const char* kVarNames[kNumVars] = {"z", "w", "a", "b", "b1", "b2", "v"};

using Monomial = std::array<int, kNumVars>;

inline constexpr Monomial kMonoOne = {0, 0, 0, 0, 0, 0, 0};

inline int mono_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic tie-break on the exponent vector
    }
};

using Poly = std::map<Monomial, Rational, GrlexLess>;

struct MonoHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int e : m) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(e));
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Poly poly_zero() { return Poly{}; }

inline Poly poly_const(const Rational& c) {
    Poly p;
    if (c != 0) p.emplace(kMonoOne, c);
    return p;
}

inline Poly poly_const(long c) { return poly_const(Rational(c)); }

inline Poly poly_mono(const Monomial& m, const Rational& c) {
    Poly p;
    if (c != 0) p.emplace(m, c);
    return p;
}

inline Poly poly_var(Var v, int exp = 1, const Rational& c = Rational(1)) {
    Monomial m = kMonoOne;
    m[v] = exp;
    return poly_mono(m, c);
}

inline void add_term(Poly& p, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) add_term(r, m, c);
    return r;
}

inline Poly neg(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r) c = -c;
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [m, c] : b) add_term(r, m, -c);
    return r;
}

inline Poly scale(const Poly& a, const Rational& s) {
    if (s == 0) return poly_zero();
    Poly r = a;
    for (auto& [m, c] : r) c *= s;
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return poly_zero();
    if (a.size() == 1 && a.begin()->first == kMonoOne) return scale(b, a.begin()->second);
    if (b.size() == 1 && b.begin()->first == kMonoOne) return scale(a, b.begin()->second);
    // Accumulate in a hash map (cheap inserts), then rebuild the ordered map.
    std::unordered_map<Monomial, Rational, MonoHash> acc;
    acc.reserve(a.size() * 2);
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Monomial m = mono_mul(ma, mb);
            auto [it, inserted] = acc.try_emplace(m, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    Poly r;
    for (auto& [m, c] : acc) {
        if (c != 0) r.emplace(m, std::move(c));
    }
    return r;
}

// Squaring walks only the upper triangle of the product table.
inline Poly square(const Poly& a) {
    if (a.empty()) return poly_zero();
    std::unordered_map<Monomial, Rational, MonoHash> acc;
    acc.reserve(a.size() * 2);
    for (auto ia = a.begin(); ia != a.end(); ++ia) {
        {
            Monomial m = mono_mul(ia->first, ia->first);
            Rational c = ia->second * ia->second;
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second += c;
        }
        for (auto ib = std::next(ia); ib != a.end(); ++ib) {
            Monomial m = mono_mul(ia->first, ib->first);
            Rational c = 2 * ia->second * ib->second;
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second += c;
        }
    }
    Poly r;
    for (auto& [m, c] : acc) {
        if (c != 0) r.emplace(m, std::move(c));
    }
    return r;
}

inline Poly pow(const Poly& a, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Poly r = poly_const(1);
    Poly b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        e >>= 1;
        if (e > 0) b = mul(b, b);
    }
    return r;
}

inline int degree(const Poly& p, Var v) {
    int d = 0;
    for (const auto& [m, c] : p) {
        if (m[v] > d) d = m[v];
    }
    return d;
}

inline int total_degree(const Poly& p) {
    if (p.empty()) return 0;
    return mono_degree(p.rbegin()->first);  // grlex: last term has max degree
}

// Simultaneous substitution of polynomials for a subset of variables.
inline Poly substitute(const Poly& p, const std::map<Var, Poly>& bindings) {
    if (bindings.empty()) return p;
    // Cache powers of each bound variable's replacement.
    std::map<Var, std::vector<Poly>> powers;
    for (const auto& [v, repl] : bindings) powers[v] = {poly_const(1), repl};
    auto power_of = [&](Var v, int e) -> const Poly& {
        auto& vec = powers[v];
        while (static_cast<int>(vec.size()) <= e) vec.push_back(mul(vec.back(), vec[1]));
        return vec[e];
    };
    Poly result;
    for (const auto& [m, c] : p) {
        Monomial rest = m;
        Poly term = poly_const(c);
        for (const auto& [v, repl] : bindings) {
            const int e = m[v];
            if (e > 0) {
                rest[v] = 0;
                term = mul(term, power_of(v, e));
            }
        }
        term = mul(term, poly_mono(rest, Rational(1)));
        result = add(result, term);
    }
    return result;
}

inline Poly derive(const Poly& p, Var v) {
    Poly r;
    for (const auto& [m, c] : p) {
        if (m[v] == 0) continue;
        Monomial d = m;
        d[v] -= 1;
        add_term(r, d, c * m[v]);
    }
    return r;
}

// Formal d/dx with z = sinh(x/2), w = cosh(x/2): the unique derivation with
// derive_x(z) = w/2, derive_x(w) = z/2 on the parameter ring.
inline Poly derive_x(const Poly& p) {
    Poly r;
    const Rational half = rat(1, 2);
    for (const auto& [m, c] : p) {
        if (m[VarZ] > 0) {
            Monomial d = m;
            d[VarZ] -= 1;
            d[VarW] += 1;
            add_term(r, d, c * m[VarZ] * half);
        }
        if (m[VarW] > 0) {
            Monomial d = m;
            d[VarW] -= 1;
            d[VarZ] += 1;
            add_term(r, d, c * m[VarW] * half);
        }
    }
    return r;
}

// Second Hirota derivative D_x^2 f . g = f''g - 2f'g' + fg''.
inline Poly hirota2(const Poly& f, const Poly& g) {
    const Poly f1 = derive_x(f), g1 = derive_x(g);
    const Poly f2 = derive_x(f1), g2 = derive_x(g1);
    return add(sub(mul(f2, g), scale(mul(f1, g1), Rational(2))), mul(f, g2));
}

inline Rational eval(const Poly& p, const std::array<Rational, kNumVars>& x) {
    Rational total = 0;
    std::array<std::vector<Rational>, kNumVars> powers;
    for (int v = 0; v < kNumVars; ++v) powers[v] = {Rational(1), x[v]};
    auto power_of = [&](int v, int e) -> const Rational& {
        auto& vec = powers[v];
        while (static_cast<int>(vec.size()) <= e) vec.push_back(vec.back() * x[v]);
        return vec[e];
    };
    for (const auto& [m, c] : p) {
        Rational t = c;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] > 0) t *= power_of(v, m[v]);
        }
        total += t;
    }
    return total;
}

struct NonExactDivision : std::runtime_error {
    NonExactDivision() : std::runtime_error("non-exact polynomial division") {}
};

// Exact division in the polynomial ring; throws NonExactDivision if the
// divisor's leading term ever fails to divide the remainder's leading term
// (sufficient for our use: all divisions below are exact by construction).
inline Poly divide_exact(const Poly& num, const Poly& den) {
    if (den.empty()) throw std::invalid_argument("divide_exact: zero divisor");
    Poly q;
    Poly r = num;
    const auto& [dm, dc] = *den.rbegin();
    while (!r.empty()) {
        const auto& [rm, rc] = *r.rbegin();
        Monomial qm;
        for (int i = 0; i < kNumVars; ++i) {
            qm[i] = rm[i] - dm[i];
            if (qm[i] < 0) throw NonExactDivision();
        }
        const Rational qc = rc / dc;
        add_term(q, qm, qc);
        r = sub(r, mul(poly_mono(qm, qc), den));
    }
    return q;
}

inline std::string poly_str(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print descending so leading terms come first.
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational ac = abs(c);
        bool printed = false;
        if (ac != 1 || m == kMonoOne) {
            os << ac.get_str();
            printed = true;
        }
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] == 0) continue;
            if (printed) os << "*";
            os << kVarNames[v];
            if (m[v] > 1) os << "^" << m[v];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace umemura
