#pragma once

// Parameter chains.  Section-3 style: bar_k(a) = a + (k-1)^2 with products
// a_{2k} = bar_2 bar_4 ... bar_{2k} and a_{2k+1} = bar_1 bar_3 ... bar_{2k+1},
// equivalently a_K = prod (a + j^2) over j = K-1, K-3, ..., down to 1 or 0.
// Toda-side style: cbar_k(c) = c + (2k-1)^2 with c_k = cbar_1 ... cbar_k,
// which is the even-indexed section-3 chain relabeled (c_k == a_{2k}).

#include "poly.hpp"

#include <vector>

namespace umemura {

struct ParamChain {
    Var symbol = VarA;
    int k = 0;
    Poly bar_value;    // symbol + (k-1)^2
    Poly chain_value;  // a_k
};

inline Poly chain_bar(Var symbol, int k) {
    return add(poly_var(symbol), poly_const(Rational(static_cast<long>(k - 1) * (k - 1))));
}

inline Poly chain_value(Var symbol, int k) {
    Poly p = poly_const(1);
    for (int j = k - 1; j >= 0; j -= 2) {
        p = mul(p, add(poly_var(symbol), poly_const(Rational(static_cast<long>(j) * j))));
    }
    return p;
}

inline ParamChain chain(Var symbol, int k) {
    return ParamChain{symbol, k, chain_bar(symbol, k), chain_value(symbol, k)};
}

inline Poly chain_product(Var symbol, const std::vector<int>& I) {
    Poly p = poly_const(1);
    for (int i : I) p = mul(p, chain_value(symbol, i));
    return p;
}

// Scalar chain evaluation used by the point-evaluation identity checkers;
// make_const lifts a small integer into the coefficient field T.
template <class T, class MakeConst>
T chain_value_at(const T& base, int k, MakeConst make_const) {
    T p = make_const(1);
    for (int j = k - 1; j >= 0; j -= 2) {
        p = p * (base + make_const(static_cast<long>(j) * j));
    }
    return p;
}

inline Poly noou_bar(Var symbol, int k) {
    const long o = 2L * k - 1;
    return add(poly_var(symbol), poly_const(Rational(o * o)));
}

inline Poly noou_chain(Var symbol, int k) {
    Poly p = poly_const(1);
    for (int j = 1; j <= k; ++j) p = mul(p, noou_bar(symbol, j));
    return p;
}

inline Poly noou_chain_product(Var symbol, const std::vector<int>& I) {
    Poly p = poly_const(1);
    for (int i : I) p = mul(p, noou_chain(symbol, i));
    return p;
}

}  // namespace umemura
