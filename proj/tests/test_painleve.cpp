#include <catch2/catch_amalgamated.hpp>

#include "umemura/painleve.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace umemura;

namespace {

Real tol(long exponent) { return pow10(exponent); }

}  // namespace

TEST_CASE("bridge values and closed-form derivatives") {
    NumericConfig cfg;
    ScopedPrecision sp(cfg.digits);

    BridgeValues b = t_bridge(rat(4, 3), cfg);
    CHECK(abs(b.v - to_real(rat(5, 2))) < tol(-45));
    CHECK(abs(b.z * b.z - to_real(rat(1, 8))) < tol(-45));
    CHECK(abs(b.w * b.w - to_real(rat(9, 8))) < tol(-45));
    CHECK(abs(b.dv1 - to_real(rat(-27, 16))) < tol(-45));

    BridgeValues c = t_bridge(rat(2), cfg);
    CHECK(abs(c.v * c.v - to_real(rat(9, 2))) < tol(-45));

    // dv/dt = -1/(2 (t(t-1))^{3/2}) on a few points
    for (const Rational& t : {rat(3, 2), rat(2), rat(3)}) {
        BridgeValues bv = t_bridge(t, cfg);
        const Real s = to_real(Rational(t * (t - 1)));
        CHECK(abs(bv.dv1 + 1 / (2 * s * sqrt(s))) < tol(-45));
        // w^2 - z^2 = 1 and v = 2(z^2 + w^2)
        CHECK(abs(bv.w * bv.w - bv.z * bv.z - 1) < tol(-45));
        CHECK(abs(bv.v - 2 * (bv.z * bv.z + bv.w * bv.w)) < tol(-45));
    }

    CHECK_THROWS_AS(t_bridge(rat(1), cfg), std::domain_error);
    CHECK_THROWS_AS(t_bridge(rat(1, 2), cfg), std::domain_error);
    NumericConfig shallow;
    shallow.digits = 20;
    CHECK_THROWS_AS(t_bridge(rat(2), shallow), std::invalid_argument);
}

TEST_CASE("u_stack closed forms and finite-difference oracle") {
    NumericConfig cfg;
    ScopedPrecision sp(cfg.digits);
    const BValues b{rat(1, 3), rat(1, 5), 0, 0};

    DerivStack w2 = u_stack(poly_var(VarW, 2), rat(4, 3), b, cfg);
    CHECK(abs(w2.value - to_real(rat(9, 8))) < tol(-45));
    CHECK(abs(w2.d1 - to_real(rat(-27, 64))) < tol(-45));  // (dv/dt)/4

    DerivStack konst = u_stack(poly_const(rat(7, 3)), rat(3, 2), b, cfg);
    CHECK(abs(konst.value - to_real(rat(7, 3))) < tol(-45));
    CHECK(konst.d1 == 0);
    CHECK(konst.d2 == 0);
    CHECK(konst.d3 == 0);

    // z^4 = ((v-2)/4)^2 through the bridge, against Richardson stencils
    DerivStack z4 = u_stack(poly_var(VarZ, 4), rat(3, 2), b, cfg);
    auto f = [](const Real& t) -> Real {
        const Real v = (2 * t - 1) / sqrt(t * (t - 1));
        return (v - 2) * (v - 2) / 16;
    };
    const Real t0 = to_real(rat(3, 2));
    CHECK(abs(z4.d1 - fd_first(f, t0, pow10(-12))) < tol(-20));
    CHECK(abs(z4.d2 - fd_second(f, t0, pow10(-10))) < tol(-20));
    CHECK(abs(z4.d3 - fd_third(f, t0, pow10(-8))) < tol(-20));
}

TEST_CASE("parameter map") {
    PVIParams p = pvi_params({rat(1, 3), rat(1, 5), rat(-1, 2), 0});
    CHECK(p.alpha == rat(1, 8));
    CHECK(p.beta == rat(-32, 225));
    CHECK(p.gamma == rat(2, 225));
    CHECK(p.delta == rat(-5, 8));

    PVIParams zero = pvi_params({0, 0, 0, 0});
    CHECK(zero.alpha == 0);
    CHECK(zero.beta == 0);
    CHECK(zero.gamma == 0);
    CHECK(zero.delta == 0);

    PVIParams equal = pvi_params({7, 7, 7, 7});
    CHECK(equal.alpha == 0);
    CHECK(equal.gamma == 0);

    // solved map: delta symmetric under b3 <-> b4, value (1 - (b3+b4+1)^2)/2
    PVIParams sa = pvi_params_solved({rat(1, 3), rat(1, 5), rat(3, 2), 0});
    PVIParams sb = pvi_params_solved({rat(1, 3), rat(1, 5), 0, rat(3, 2)});
    CHECK(sa.delta == rat(-21, 8));
    CHECK(sb.delta == sa.delta);
    CHECK(sa.alpha == sb.alpha);
    // alpha/beta/gamma agree with the displayed map
    CHECK(sa.alpha == rat(9, 8));
    CHECK(sa.beta == rat(-32, 225));
}

TEST_CASE("h functions: closed forms and exact structure") {
    NumericConfig cfg;
    ScopedPrecision sp(cfg.digits);

    DerivStack h0 = h_functions(HKind::H0, 0, 0, {0, 0, 0, 0}, rat(3, 2), cfg);
    CHECK(h0.value == 0);
    CHECK(h0.d1 == 0);

    // h_{1,m} at (b1,b2) = (0, m+1) collapses to -(2t-1)(m+1)^2/2
    for (int m : {0, 1, 2}) {
        const BValues b{0, Rational(m + 1), 0, 0};
        for (const Rational& t : {rat(3, 2), rat(2)}) {
            DerivStack h = h_functions(HKind::Hnm, 1, m, b, t, cfg);
            const Real closed = -to_real(Rational((2 * t - 1) * (m + 1) * (m + 1))) / 2;
            CHECK(abs(h.value - closed) < tol(-40));
            CHECK(abs(h.d1 + Real((m + 1) * (m + 1))) < tol(-40));
            CHECK(abs(h.d2) < tol(-40));
        }
    }
    // anchor: m=0, t=2 -> -3/2
    DerivStack anchor = h_functions(HKind::Hnm, 1, 0, {0, 1, 0, 0}, rat(2), cfg);
    CHECK(abs(anchor.value + to_real(rat(3, 2))) < tol(-40));

    // the closed form satisfies E_VI(0, m+1, b3, b4) exactly, for any rational
    // b3, b4, in both bracket variants
    for (int m : {0, 1, 3}) {
        CHECK(prop4_ii_exact(m, rat(2), rat(7, 3), rat(11, 5)) == 0);
        CHECK(prop4_ii_exact(m, rat(5, 2), rat(1, 7), 0) == 0);
        CHECK(prop4_ii_exact(m, rat(5, 2), rat(1, 7), rat(2, 9), false) == 0);
    }

    // d2 of h_{0,1} against a Richardson stencil on d1 values (jet-free oracle)
    const BValues b{rat(1, 3), rat(1, 5), 0, 0};
    const Rational t0 = rat(3, 2);
    const Rational h = rat(1, 100000000);  // 1e-8
    auto d1_at = [&](const Rational& t) -> Real {
        return h_functions(HKind::Hnm, 0, 1, b, t, cfg).d1;
    };
    auto stencil = [&](const Rational& hh) -> Real {
        return (d1_at(t0 + hh) - d1_at(t0 - hh)) / (2 * to_real(hh));
    };
    const Real fd_d2 = (4 * stencil(h / 2) - stencil(h)) / 3;
    DerivStack hs = h_functions(HKind::Hnm, 0, 1, b, t0, cfg);
    CHECK(abs(hs.d2 - fd_d2) < tol(-25));
}

TEST_CASE("sigma-form residuals: Prop 4, Lemma 8, Corollary 1") {
    NumericConfig cfg;
    ScopedPrecision scope(cfg.digits);
    const Real bound = tol(-35);

    SweepParams sp;
    for (int m : {1, 2, 3, 4}) {
        sp.m = m;
        NumericReport r = sweep("PROP4_I", sp, cfg.t_grid, cfg);
        INFO(r.check << " m=" << m << " max=" << format_residual(r.max_residual));
        CHECK(r.status == "pass");
        CHECK(r.max_residual < bound);
    }
    for (int m : {0, 1, 2}) {
        sp.m = m;
        CHECK(sweep("PROP4_II", sp, cfg.t_grid, cfg).status == "pass");
    }
    for (int n = 1; n <= 5; ++n) {
        for (int m = 0; n + m <= 5; ++m) {
            sp.n = n;
            sp.m = m;
            NumericReport iii = sweep("PROP4_III", sp, cfg.t_grid, cfg);
            NumericReport lem8 = sweep("LEM8", sp, cfg.t_grid, cfg);
            NumericReport cor1 = sweep("COR1", sp, cfg.t_grid, cfg);
            INFO("n=" << n << " m=" << m << " iii=" << format_residual(iii.max_residual)
                      << " lem8=" << format_residual(lem8.max_residual)
                      << " cor1=" << format_residual(cor1.max_residual));
            CHECK(iii.status == "pass");
            CHECK(lem8.status == "pass");
            CHECK(cor1.status == "recorded");
            CHECK(cor1.max_residual < bound);  // verified, though the claim is ours
        }
    }

    // printed-variant controls stay loud
    sp.n = 0;
    sp.m = 1;
    NumericReport printed_h0 = sweep("H0_PRINTED", sp, cfg.t_grid, cfg);
    CHECK(printed_h0.status == "recorded");
    CHECK(printed_h0.max_residual > tol(-6));
    NumericReport unsquared = sweep("EVI_UNSQUARED", sp, cfg.t_grid, cfg);
    CHECK(unsquared.status == "recorded");
    CHECK(unsquared.max_residual > tol(-6));

    // negative control: nudging b3 by 1/10 wrecks the residual
    {
        const Bridge br = t_bridge_jets(rat(3, 2), 5);
        const BValues good{rat(1, 3), rat(1, 5), rat(3, 2), 0};
        const BValues bad{rat(1, 3), rat(1, 5), rat(3, 2) + rat(1, 10), 0};
        const DerivStack h = to_stack(h_nm_jet(0, 1, good, br));
        const Real t = to_real(rat(3, 2));
        CHECK(abs(evi_residual(h, good, t)) < bound);
        CHECK(abs(evi_residual(h, bad, t)) > tol(-6));
    }

    // residuals stay below tolerance under grid refinement
    sp.m = 1;
    const std::vector<Rational> finer = {rat(5, 4),  rat(7, 5), rat(8, 5),
                                         rat(7, 4),  rat(9, 4), rat(11, 4)};
    CHECK(sweep("PROP4_I", sp, finer, cfg).status == "pass");
}

TEST_CASE("q_m: reading resolution and Painleve residuals") {
    NumericConfig cfg;
    ScopedPrecision scope(cfg.digits);

    QmResolution res = resolve_qm(1, {rat(1, 3), rat(1, 5), 0, 0}, rat(6, 5), cfg);
    CHECK(res.resolved);
    CHECK(res.reading.indexing == QmIndexing::FamilyZero);
    CHECK(res.reading.parse == QmParse::WholeBrace);
    CHECK_FALSE(res.reading.printed_map);
    CHECK(res.record.find("fam0|brace|solved-map:") != std::string::npos);
    CHECK(res.record.find("ume|first|printed-map:") != std::string::npos);

    // the displayed map really does fail for the winning q
    {
        const Bridge br = t_bridge_jets(rat(6, 5), 5);
        const BValues b{rat(1, 3), rat(1, 5), 0, 0};
        const DerivStack q = to_stack(detail_pv::qm_pieces(res.reading, 1, b, br).q);
        const BValues tuple{rat(1, 3), rat(1, 5), rat(3, 2), 0};
        const Real t = to_real(rat(6, 5));
        CHECK(abs(pvi_residual(q, pvi_params(tuple), t, true)) > 1);
        CHECK(abs(pvi_residual(q, pvi_params_solved(tuple), t, false)) < tol(-30));
    }

    SweepParams sp;
    for (int m : {1, 2, 3}) {
        sp.m = m;
        NumericReport a = sweep("QM_A", sp, cfg.t_grid, cfg);
        NumericReport b = sweep("QM_B", sp, cfg.t_grid, cfg);
        NumericReport e = sweep("EQ51", sp, cfg.t_grid, cfg);
        INFO("m=" << m << " a=" << format_residual(a.max_residual)
                  << " b=" << format_residual(b.max_residual)
                  << " e=" << format_residual(e.max_residual));
        CHECK(a.status == "pass");
        CHECK(a.max_residual < tol(-30));
        CHECK(b.status == "pass");
        CHECK(b.max_residual < tol(-30));
        CHECK(e.status == "pass");
        CHECK(e.max_residual < tol(-30));
        // the two advertised tuples name the same equation under the solved map
        CHECK(format_residual(a.max_residual) == format_residual(b.max_residual));
    }

    CHECK_THROWS_AS(q_m_stack(0, {rat(1, 3), rat(1, 5), 0, 0}, rat(2), cfg),
                    std::invalid_argument);
}

TEST_CASE("precision doubling shrinks passing residuals") {
    SweepParams sp;
    sp.m = 2;
    NumericConfig c50 = make_config(50);
    NumericConfig c100 = make_config(100);
    for (const char* id : {"PROP4_I", "QM_A", "EQ51"}) {
        NumericReport lo = sweep(id, sp, c50.t_grid, c50);
        NumericReport hi = sweep(id, sp, c100.t_grid, c100);
        INFO(id << " 50d=" << format_residual(lo.max_residual)
                << " 100d=" << format_residual(hi.max_residual));
        CHECK(lo.status == "pass");
        CHECK(hi.status == "pass");
        ScopedPrecision scope(100);
        CHECK(hi.max_residual < lo.max_residual * pow10(-10));
    }
}

TEST_CASE("erratum witnesses are separated by many orders") {
    NumericConfig cfg;
    ScopedPrecision scope(cfg.digits);
    ResidualPair h0w = h0_sign_witness(cfg);
    CHECK(h0w.corrected < tol(-35));
    CHECK(h0w.printed > tol(-6));
    ResidualPair sqw = evi_square_witness(cfg);
    CHECK(sqw.corrected < tol(-35));
    CHECK(sqw.printed > tol(-4));
}

TEST_CASE("numeric reports: shape, empty grid, determinism") {
    NumericConfig cfg;
    SweepParams sp;
    sp.m = 1;

    NumericReport r = sweep("PROP4_I", sp, cfg.t_grid, cfg);
    const std::string dump = report_json(r).dump();
    CHECK(dump.find("{\"check\":\"PROP4_I\"") == 0);
    CHECK(dump.find("\"params\":[\"n=0;m=1;b1=1/3;b2=1/5\"]") != std::string::npos);
    CHECK(dump.find("\"digits\":50") != std::string::npos);
    CHECK(dump.find("\"grid\":[\"6/5\",\"4/3\",\"3/2\",\"2\",\"3\"]") != std::string::npos);
    CHECK(dump.find("\"status\":\"pass\"}") != std::string::npos);

    NumericReport again = sweep("PROP4_I", sp, cfg.t_grid, cfg);
    CHECK(report_json(again).dump() == dump);

    NumericReport empty = sweep("PROP4_I", sp, {}, cfg);
    CHECK(empty.status == "empty");
    CHECK(report_json(empty).dump().find("\"grid\":[]") != std::string::npos);

    CHECK_THROWS_AS(sweep("NOPE", sp, cfg.t_grid, cfg), std::invalid_argument);
}
