#pragma once

// The index sets [n;m] = {1..n} u {n+2, n+4, ..., n+2m} and the subset
// weights d_{n,m}(I), c(I).  d is computed as an exact rational product and
// asserted integral -- integrality is a theorem about these sets, and the
// assertion doubles as a regression check on the set construction.

#include "rational.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace umemura {

struct IndexSet {
    int n = 0;
    int m = 0;
    std::vector<int> elems;  // sorted ascending, size n + m
};

inline IndexSet index_set(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("index_set: negative parameter");
    IndexSet s;
    s.n = n;
    s.m = m;
    for (int i = 1; i <= n; ++i) s.elems.push_back(i);
    for (int j = 1; j <= m; ++j) s.elems.push_back(n + 2 * j);
    return s;
}

inline std::vector<int> subset_from_mask(const IndexSet& s, std::uint32_t mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < s.elems.size(); ++i) {
        if (mask & (1u << i)) out.push_back(s.elems[i]);
    }
    return out;
}

inline long element_sum(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0L);
}

struct NonIntegralD : std::runtime_error {
    NonIntegralD() : std::runtime_error("subset weight d_{n,m}(I) is not an integer") {}
};

struct SubsetWeight {
    mpz_class d;           // integer value of d_{n,m}(I)
    long c = 0;            // c(I)
    std::uint32_t mask = 0;
};

inline SubsetWeight subset_weight(int n, int m, std::uint32_t mask) {
    const IndexSet s = index_set(n, m);
    if (static_cast<std::size_t>(mask) >= (1ULL << s.elems.size()) && !s.elems.empty())
        throw std::invalid_argument("subset_weight: mask out of range");
    Rational d = 1;
    long c = 0;
    for (std::size_t ii = 0; ii < s.elems.size(); ++ii) {
        if (!(mask & (1u << ii))) continue;
        const int i = s.elems[ii];
        if (i > n) c += (i - n) / 2;
        for (std::size_t jj = 0; jj < s.elems.size(); ++jj) {
            if (mask & (1u << jj)) continue;
            const int j = s.elems[jj];
            d *= rat(i + j > 0 ? i + j : -(i + j), i - j > 0 ? i - j : -(i - j));
        }
    }
    if (!is_integer(d)) throw NonIntegralD();
    SubsetWeight w;
    w.d = d.get_num();
    w.c = c;
    w.mask = mask;
    return w;
}

inline SubsetWeight subset_weight(int n, int m, const std::vector<int>& I) {
    const IndexSet s = index_set(n, m);
    std::uint32_t mask = 0;
    for (int x : I) {
        bool found = false;
        for (std::size_t i = 0; i < s.elems.size(); ++i) {
            if (s.elems[i] == x) {
                mask |= (1u << i);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("subset_weight: element not in [n;m]");
    }
    return subset_weight(n, m, mask);
}

}  // namespace umemura
