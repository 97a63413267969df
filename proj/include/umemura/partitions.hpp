#pragma once

// Partitions, Frobenius symbols and the Weyl dimension formula for GL(n).
// gl_dim ships as an exploratory cross-check only: the normative subset
// weights come from the product formula in index_set.hpp, and the recorded
// comparison table in the tests documents where the two disagree.

#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace umemura {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    bool operator==(const Partition&) const = default;
};

struct FrobeniusSymbol {
    std::vector<int> arms;  // strictly decreasing, >= 0
    std::vector<int> legs;  // strictly decreasing, >= 0, same length

    bool operator==(const FrobeniusSymbol&) const = default;
};

inline Partition frobenius_to_partition(const FrobeniusSymbol& f) {
    if (f.arms.size() != f.legs.size()) throw std::invalid_argument("frobenius: arm/leg length mismatch");
    const int d = static_cast<int>(f.arms.size());
    // Row i (0-based) of the diagram has arms[i] cells right of the diagonal,
    // column j has legs[j] cells below it; rebuild row lengths directly.
    std::vector<int> rows;
    for (int i = 0; i < d; ++i) rows.push_back(f.arms[i] + i + 1);
    // Rows below the diagonal block: row r (0-based, r >= d) contains a cell in
    // column j iff legs[j] >= r - j.
    int max_rows = d;
    for (int j = 0; j < d; ++j) max_rows = std::max(max_rows, f.legs[j] + j + 1);
    for (int r = d; r < max_rows; ++r) {
        int len = 0;
        for (int j = 0; j < d; ++j) {
            if (f.legs[j] >= r - j) ++len;
        }
        if (len == 0) break;
        rows.push_back(len);
    }
    return Partition{rows};
}

inline FrobeniusSymbol partition_to_frobenius(const Partition& p) {
    FrobeniusSymbol f;
    const auto& rows = p.parts;
    std::vector<int> cols;  // conjugate partition
    for (std::size_t j = 0; rows.size() > 0; ++j) {
        int len = 0;
        for (int row : rows) {
            if (row > static_cast<int>(j)) ++len;
        }
        if (len == 0) break;
        cols.push_back(len);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int arm = rows[i] - static_cast<int>(i) - 1;
        if (arm < 0) break;
        const int leg = cols[i] - static_cast<int>(i) - 1;
        f.arms.push_back(arm);
        f.legs.push_back(leg);
    }
    return f;
}

// Weyl dimension formula: prod_{1<=i<j<=n} (l_i - l_j + j - i)/(j - i).
inline mpz_class gl_dim(const Partition& p, int n) {
    if (static_cast<int>(p.parts.size()) > n) throw std::invalid_argument("gl_dim: partition longer than n");
    std::vector<long> lambda(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) lambda[i] = p.parts[i];
    Rational dim = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            dim *= rat(lambda[i] - lambda[j] + j - i, j - i);
        }
    }
    if (!is_integer(dim)) throw std::logic_error("gl_dim: non-integral Weyl product");
    return dim.get_num();
}

}  // namespace umemura
