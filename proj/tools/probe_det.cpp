// Scratch probe: find the entry sign rule making the determinant match the
// a<->b swapped subset sum.
#include "umemura/determinant.hpp"
#include "umemura/families.hpp"
#include "umemura/poly.hpp"

#include <cstdio>
#include <functional>

using namespace umemura;

static Poly det_with_rule(int n, int m, int k, const std::function<long(int)>& ci) {
    const IndexSet s = index_set(n, m);
    std::vector<int> labels;
    for (int e : s.elems) {
        if (e > k) labels.push_back(e);
    }
    PolyMatrix mat(static_cast<int>(labels.size()));
    for (std::size_t ii = 0; ii < labels.size(); ++ii) {
        const int i = labels[ii];
        Rational off = rat(2L * i);
        if (ci(i) % 2 != 0) off = -off;
        for (int e : s.elems) {
            if (e == i) continue;
            off *= rat(i + e > 0 ? i + e : -(i + e), i - e > 0 ? i - e : -(i - e));
        }
        const Poly bi_zi = mul(chain_value(VarB, i), poly_var(VarZ, i));
        for (std::size_t jj = 0; jj < labels.size(); ++jj) {
            const int j = labels[jj];
            Poly entry = scale(bi_zi, off / Rational(i + j));
            if (i == j) {
                Rational diag = 1;
                for (int sk = 1; sk <= k; ++sk) diag *= rat(i + sk, i - sk);
                entry = add(entry, scale(mul(chain_value(VarA, i), poly_var(VarW, i)), diag));
            }
            mat.at(static_cast<int>(ii), static_cast<int>(jj)) = entry;
        }
    }
    return det(mat);
}

int main() {
    struct Rule {
        const char* name;
        std::function<long(int)> f;
    };
    // All rules keep (i-n)/2 for i>n and vary the i<=n branch.
    auto mk = [](long (*low)(int, int), int n) {
        return [low, n](int i) { return i <= n ? low(i, n) : (i - n) / 2; };
    };
    Rule rules[] = {
        {"printed c(i)=i", nullptr},
        {"c(i)=0 (mirror subset c)", nullptr},
        {"c(i)=i+1", nullptr},
        {"c(i)=n-i", nullptr},
    };
    long (*lows[4])(int, int) = {
        [](int i, int) -> long { return i; },
        [](int, int) -> long { return 0; },
        [](int i, int) -> long { return i + 1; },
        [](int i, int n) -> long { return n - i; },
    };
    for (int r = 0; r < 4; ++r) {
        int mismatches = 0;
        for (int n = 0; n <= 5; ++n) {
            for (int m = 0; n + m <= 5; ++m) {
                for (int k = 0; k <= std::min(n, 2); ++k) {
                    const Poly d = det_with_rule(n, m, k, mk(lows[r], n));
                    const Poly g = substitute(gen_umemura(n, m, k),
                                              {{VarA, poly_var(VarB)}, {VarB, poly_var(VarA)}});
                    if (!(d == g)) {
                        ++mismatches;
                        if (mismatches <= 3) std::printf("  rule '%s' mismatch at (%d,%d,%d)\n", rules[r].name, n, m, k);
                    }
                }
            }
        }
        std::printf("rule '%s': %d mismatches\n", rules[r].name, mismatches);
    }
    return 0;
}
