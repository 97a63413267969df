#include <catch2/catch_amalgamated.hpp>

#include "umemura/determinant.hpp"
#include "umemura/modular.hpp"
#include "umemura/point.hpp"
#include "umemura/poly.hpp"
#include "umemura/quad.hpp"
#include "umemura/quotient.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

using namespace umemura;

namespace {

Poly random_poly(SplitMix64& rng, int terms) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m = kMonoOne;
        for (int v = 0; v < kNumVars; ++v) {
            if (rng.below(4) == 0) m[v] = static_cast<int>(rng.below(3));
        }
        add_term(p, m, rng.rational());
    }
    return p;
}

std::array<Rational, kNumVars> random_point(SplitMix64& rng) {
    std::array<Rational, kNumVars> x;
    for (auto& c : x) c = rng.rational();
    return x;
}

// Independent determinant oracle: signed sum over all permutations.
Poly det_permanent_style(const PolyMatrix& m) {
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly total;
    do {
        int inversions = 0;
        for (int i = 0; i < m.n; ++i) {
            for (int j = i + 1; j < m.n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        Poly prod = poly_const(inversions % 2 == 0 ? 1 : -1);
        for (int i = 0; i < m.n; ++i) prod = mul(prod, m.at(i, perm[i]));
        total = add(total, prod);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

const Poly Z = poly_var(VarZ);
const Poly W = poly_var(VarW);

}  // namespace

TEST_CASE("ring axioms hold on random instances") {
    SplitMix64 rng(20240811);
    for (int rep = 0; rep < 25; ++rep) {
        const Poly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 3);
        CHECK(mul(p, q) == mul(q, p));
        CHECK(mul(p, add(q, r)) == add(mul(p, q), mul(p, r)));
        CHECK(mul(mul(p, q), r) == mul(p, mul(q, r)));
        CHECK(sub(p, p).empty());
        CHECK(add(p, neg(p)).empty());
    }
}

TEST_CASE("closed-form products expand correctly") {
    CHECK(mul(add(Z, W), sub(Z, W)) == sub(pow(Z, 2), pow(W, 2)));

    Poly cube_expected;
    add_term(cube_expected, Monomial{3, 0, 0, 0, 0, 0, 0}, 1);
    add_term(cube_expected, Monomial{2, 1, 0, 0, 0, 0, 0}, 3);
    add_term(cube_expected, Monomial{1, 2, 0, 0, 0, 0, 0}, 3);
    add_term(cube_expected, Monomial{0, 3, 0, 0, 0, 0, 0}, 1);
    CHECK(pow(add(Z, W), 3) == cube_expected);

    // (z+1)^5 at z=1 is 2^5.
    std::array<Rational, kNumVars> ones;
    ones.fill(Rational(1));
    CHECK(eval(pow(add(Z, poly_const(1)), 5), ones) == 32);
}

TEST_CASE("grlex order and degrees") {
    const Poly p = add(add(pow(Z, 3), mul(poly_var(VarA), pow(W, 2))), poly_const(7));
    CHECK(total_degree(p) == 3);
    CHECK(degree(p, VarZ) == 3);
    CHECK(degree(p, VarW) == 2);
    CHECK(degree(p, VarB) == 0);
    // Iteration ascends: constant first, top-degree monomial last.
    CHECK(p.begin()->first == kMonoOne);
    CHECK(mono_degree(p.rbegin()->first) == 3);
}

TEST_CASE("substitution") {
    // a -> -4*b1^2 sends a+1 to 1-4*b1^2.
    const Poly repl = poly_var(VarB1, 2, Rational(-4));
    const Poly image = substitute(add(poly_var(VarA), poly_const(1)), {{VarA, repl}});
    Poly expected = poly_const(1);
    add_term(expected, Monomial{0, 0, 0, 0, 2, 0, 0}, -4);
    CHECK(image == expected);

    // Swapping a and b twice is the identity.
    SplitMix64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 5);
        const std::map<Var, Poly> swap_ab = {{VarA, poly_var(VarB)}, {VarB, poly_var(VarA)}};
        CHECK(substitute(substitute(p, swap_ab), swap_ab) == p);
    }

    // Substitution is a ring homomorphism.
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
        const std::map<Var, Poly> phi = {{VarZ, add(poly_var(VarV), poly_const(1))},
                                         {VarA, mul(poly_var(VarB1), poly_var(VarB2))}};
        CHECK(substitute(mul(p, q), phi) == mul(substitute(p, phi), substitute(q, phi)));
        CHECK(substitute(add(p, q), phi) == add(substitute(p, phi), substitute(q, phi)));
    }
}

TEST_CASE("partial derivatives") {
    CHECK(derive(mul(pow(Z, 3), W), VarZ) == mul(pow(Z, 2), scale(W, Rational(3))));
    CHECK(derive(poly_var(VarV, 2), VarV) == scale(poly_var(VarV), Rational(2)));
    CHECK(derive(poly_const(5), VarZ).empty());

    SplitMix64 rng(99);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
        const Poly lhs = derive(mul(p, q), VarW);
        const Poly rhs = add(mul(derive(p, VarW), q), mul(p, derive(q, VarW)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("x-derivation exchanges z and w with half factors") {
    CHECK(derive_x(Z) == scale(W, rat(1, 2)));
    CHECK(derive_x(W) == scale(Z, rat(1, 2)));
    CHECK(derive_x(mul(Z, W)) == scale(add(pow(Z, 2), pow(W, 2)), rat(1, 2)));
    CHECK(derive_x(poly_var(VarA)).empty());
    // w^2 - z^2 - 1 is a first integral: its derivative vanishes identically.
    const Poly rel = sub(sub(pow(W, 2), pow(Z, 2)), poly_const(1));
    CHECK(derive_x(rel).empty());

    SplitMix64 rng(1234);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly p = random_poly(rng, 4), q = random_poly(rng, 4);
        CHECK(derive_x(mul(p, q)) == add(mul(derive_x(p), q), mul(p, derive_x(q))));
    }
}

TEST_CASE("quotient reduction is canonical and multiplicative") {
    const ReducedPoly w2 = reduce(pow(W, 2));
    CHECK(w2.p1.empty());
    CHECK(w2.p0 == add(pow(Z, 2), poly_const(1)));

    const ReducedPoly w3 = reduce(pow(W, 3));
    CHECK(w3.p0.empty());
    CHECK(w3.p1 == add(pow(Z, 2), poly_const(1)));

    CHECK(reduce(pow(Z, 3)).p0 == pow(Z, 3));

    SplitMix64 rng(5150);
    for (int rep = 0; rep < 15; ++rep) {
        const Poly p = random_poly(rng, 5), q = random_poly(rng, 5);
        // Idempotence on representatives.
        const ReducedPoly rp = reduce(p);
        CHECK(reduce(to_poly(rp)) == rp);
        // Multiplicativity through representatives.
        CHECK(quotient_equal(mul(p, q), mul(to_poly(reduce(p)), to_poly(reduce(q)))));
        // The defining relation generates the kernel we quotient by.
        const Poly rel = sub(sub(pow(W, 2), pow(Z, 2)), poly_const(1));
        CHECK(quotient_equal(mul(p, rel), poly_zero()));
    }
}

TEST_CASE("hirota structure constants") {
    // D^2 z.z reduces to -1/2, D^2 w.w to +1/2, D^2 z.w to 0.
    const ReducedPoly zz = reduce(hirota2(Z, Z));
    CHECK(zz.p1.empty());
    CHECK(zz.p0 == poly_const(rat(-1, 2)));

    const ReducedPoly ww = reduce(hirota2(W, W));
    CHECK(ww.p1.empty());
    CHECK(ww.p0 == poly_const(rat(1, 2)));

    CHECK(hirota2(Z, W).empty());

    SplitMix64 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        const Poly f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 3);
        CHECK(hirota2(f, g) == hirota2(g, f));
        CHECK(hirota2(add(f, h), g) == add(hirota2(f, g), hirota2(h, g)));
        const Rational s = rng.rational();
        CHECK(hirota2(scale(f, s), g) == scale(hirota2(f, g), s));
    }
}

TEST_CASE("bilinear exchange identity on monomial pairs") {
    // For z^n1 w^m1 and z^n2 w^m2 with n1+m1 = n2+m2, the reduced class of
    // 4 z^2 w^2 D^2 (f.g) matches a single monomial times a degree-two factor.
    const Poly four_z2w2 = scale(mul(pow(Z, 2), pow(W, 2)), Rational(4));
    for (int n1 = 0; n1 <= 6; ++n1) {
        for (int m1 = 0; m1 <= 6; ++m1) {
            for (int n2 = 0; n2 <= 6; ++n2) {
                const int m2 = n1 + m1 - n2;
                if (m2 < 0 || m2 > 6) continue;
                const Poly f = mul(pow(Z, n1), pow(W, m1));
                const Poly g = mul(pow(Z, n2), pow(W, m2));
                const Poly lhs = mul(four_z2w2, hirota2(f, g));
                const long sn = n1 + n2, dn = n1 - n2;
                const long sm = m1 + m2, dm = m1 - m2;
                const Poly factor = add(scale(pow(W, 2), Rational(-(sn - dn * dn))),
                                        scale(pow(Z, 2), Rational(sm - dm * dm)));
                const Poly rhs = mul(factor, mul(pow(Z, n1 + n2), pow(W, m1 + m2)));
                REQUIRE(quotient_equal(lhs, rhs));
            }
        }
    }
}

TEST_CASE("determinant routes agree with the permutation oracle") {
    SplitMix64 rng(424242);
    for (int n : {1, 2, 3, 4, 5}) {
        for (int rep = 0; rep < (n <= 3 ? 6 : 3); ++rep) {
            PolyMatrix m(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (rng.below(5) == 0) continue;  // leave some entries zero
                    m.at(i, j) = random_poly(rng, 2);
                }
            }
            const Poly expected = det_permanent_style(m);
            CHECK(det(m) == expected);
            CHECK(detail::det_cofactor(m) == expected);
            CHECK(detail::det_bareiss(m) == expected);
        }
    }
    CHECK(det(PolyMatrix(0)) == poly_const(1));
}

TEST_CASE("exact division") {
    SplitMix64 rng(86);
    for (int rep = 0; rep < 15; ++rep) {
        const Poly q = random_poly(rng, 4);
        Poly d = random_poly(rng, 3);
        if (d.empty()) d = poly_const(1);
        CHECK(divide_exact(mul(q, d), d) == q);
    }
    CHECK_THROWS_AS(divide_exact(add(mul(Z, W), poly_const(1)), Z), NonExactDivision);
    CHECK_THROWS_AS(divide_exact(Z, poly_zero()), std::invalid_argument);
}

TEST_CASE("rational evaluation") {
    // (b+1)w^2 - (a+1)z^2 at a=1, b=2, z=1, w=3.
    Poly p;
    add_term(p, Monomial{0, 2, 0, 1, 0, 0, 0}, 1);
    add_term(p, Monomial{0, 2, 0, 0, 0, 0, 0}, 1);
    add_term(p, Monomial{2, 0, 1, 0, 0, 0, 0}, -1);
    add_term(p, Monomial{2, 0, 0, 0, 0, 0, 0}, -1);
    std::array<Rational, kNumVars> x{};
    x[VarZ] = 1;
    x[VarW] = 3;
    x[VarA] = 1;
    x[VarB] = 2;
    x[VarB1] = x[VarB2] = x[VarV] = 0;
    CHECK(eval(p, x) == 25);
}

TEST_CASE("modular evaluation matches rational evaluation") {
    const auto primes = identity_primes(3);
    SplitMix64 rng(777);
    for (const auto prime : primes) {
        for (int rep = 0; rep < 8; ++rep) {
            const Poly p = random_poly(rng, 6);
            const auto x = random_point(rng);
            std::array<Zp, kNumVars> xm;
            for (int v = 0; v < kNumVars; ++v) xm[v] = zp_from_rational(x[v], prime);
            const Zp got = eval_point<Zp>(p, xm, [&](const Rational& q) { return zp_from_rational(q, prime); });
            CHECK(got == zp_from_rational(eval(p, x), prime));
        }
    }
}

TEST_CASE("quadratic-extension evaluation matches reduce-then-evaluate") {
    SplitMix64 rng(31415);
    for (int rep = 0; rep < 12; ++rep) {
        const Poly p = random_poly(rng, 6);
        auto x = random_point(rng);
        const Rational c = x[VarZ] * x[VarZ] + 1;
        const Quad<Rational> got =
            eval_quad<Rational>(p, x, c, [](const Rational& q) { return q; });
        const ReducedPoly r = reduce(p);
        CHECK(got.u0 == eval(r.p0, x));
        CHECK(got.u1 == eval(r.p1, x));
    }
}

TEST_CASE("quad arithmetic") {
    const Rational c = rat(5);
    const Quad<Rational> w1 = quad_w_pow(1, Rational(1), c);
    CHECK(w1 * w1 == quad_scalar(c, c));
    CHECK(quad_w_pow(4, Rational(1), c) == quad_scalar(Rational(25), c));
    CHECK(quad_w_pow(5, Rational(1), c) == Quad<Rational>{Rational(0), Rational(25), c});
    CHECK(quad_is_zero(quad_scalar(Rational(0), c), Rational(0)));
}

TEST_CASE("prime machinery") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));  // Carmichael number
    CHECK(is_prime_u64((1ULL << 61) - 1));
    const auto primes = identity_primes(4);
    REQUIRE(primes.size() == 4);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        CHECK(primes[i] > (1ULL << 62));
        CHECK(is_prime_u64(primes[i]));
        if (i > 0) CHECK(primes[i] > primes[i - 1]);
        // Fermat sanity check.
        CHECK(powmod_u64(2, primes[i] - 1, primes[i]) == 1);
    }
    // Identical seeds give identical streams.
    SplitMix64 r1(11), r2(11);
    for (int i = 0; i < 100; ++i) CHECK(r1.next() == r2.next());
}

TEST_CASE("division by residues divisible by the prime is rejected") {
    const auto primes = identity_primes(1);
    const std::uint64_t p = primes[0];
    const mpz_class pz(static_cast<unsigned long>(p));
    Rational bad(1);
    bad /= Rational(pz);
    CHECK_THROWS_AS(zp_from_rational(bad, p), BadPrime);
    CHECK_THROWS_AS(Zp(0, p).inverse(), BadPrime);
}
