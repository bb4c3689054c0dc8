#include <catch2/catch_amalgamated.hpp>

#include "imf/extremal.hpp"
#include "imf/ratio.hpp"

using namespace imf;

TEST_CASE("kronecker search pins U = 11, V = -3 at x = 1/2, eps = 0.003") {
    auto sol = kroneckerSearch(Rat(1, 2), Rat(3, 1000));
    CHECK(sol.U == 11);
    CHECK(sol.V == -3);
    CHECK(sol.achievedError < Rat(3, 1000));
    CHECK(sol.achievedError > Rat(2, 1000));  // ~0.00258
}

TEST_CASE("looser tolerance admits U = 1, V = 1") {
    auto sol = kroneckerSearch(Rat(1, 2), Rat(15, 100));
    CHECK(sol.U == 1);
    CHECK(sol.V == 1);
}

TEST_CASE("tight tolerance with a small bound fails loudly") {
    try {
        kroneckerSearch(Rat(1, 2), Rat(1, Int(1000000000)), Family::Sqrt2, Int(10));
        FAIL("expected SearchBoundExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SearchBoundExceeded);
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("X sequence recurrence and exact closed form") {
    auto sol = kroneckerSearch(Rat(1, 2), Rat(3, 1000));
    auto xs = xSequence(sol, 7);
    CHECK(xs == std::vector<Int>{11, -3, 5, 7, 19, 45, 109});
    for (long n = 0; n < 30; ++n) {
        QuadIrr cf = xClosedForm(sol, n);
        REQUIRE(cf.is_rational());
        CHECK(cf.rational_value() == Rat(xSequence(sol, n + 2)[n]));
    }
    auto loose = kroneckerSearch(Rat(1, 2), Rat(15, 100));
    CHECK(xSequence(loose, 6) == std::vector<Int>{1, 1, 3, 7, 17, 41});
}

TEST_CASE("buildOmega splices the reversed expansion onto period (2)") {
    auto pair = buildOmega(kroneckerSearch(Rat(1, 2), Rat(3, 1000)));
    CHECK(pair.omega == PartialQuotients::periodic(0, {2, 2, 1}, {2}));
    CHECK(pair.k == 3);
    CHECK(pair.n0 == 0);
    CHECK(equivalent(pair.omega, silver_ratio_cf()));
    // denominators continue the X sequence: 7, 19, 45, 109, ...
    auto cs = convergents(pair.omega, 8);
    CHECK(cs[3].q == 7);
    CHECK(cs[4].q == 19);
    CHECK(cs[6].q == 109);
}

TEST_CASE("degenerate 1/1 start advances k") {
    auto pair = buildOmega(kroneckerSearch(Rat(1, 2), Rat(15, 100)));
    CHECK(pair.k == 2);  // (X_1, X_2) = (1, 3)
    CHECK(equivalent(pair.omega, silver_ratio_cf()));
}

TEST_CASE("pell closed form matches the recurrence for n <= 40") {
    auto cs = convergents(silver_ratio_cf(), 41);
    for (long n = 0; n <= 40; ++n) {
        QuadIrr v = pellClosedForm(n);
        REQUIRE(v.is_rational());
        CHECK(v.rational_value() == Rat(cs[n].q));
        // enclosure agreement to width 1e-30
        RatInterval e = enclose(v, 128);
        CHECK(e.width() < Rat(1, Int("1000000000000000000000000000000")));
        CHECK(e.contains(Rat(cs[n].q)));
    }
}

TEST_CASE("target constant out of range is rejected") {
    for (auto bad : {Rat(1, 10), Rat(3, 2), Rat(55, 100)}) {
        try {
            buildPairForConstant(Family::Sqrt2, bad, Rat(1, 100));
            FAIL("expected TargetOutOfRange");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::TargetOutOfRange);
        }
    }
    // tau family range is [sqrt(tau)-1, tau-1) ~ [0.272, 0.618)
    CHECK_THROWS_AS(buildPairForConstant(Family::Tau, Rat(7, 10), Rat(1, 100)), Error);
}

TEST_CASE("constructed pairs approach their target constants") {
    // sqrt2 family at 0.7
    auto p = buildPairForConstant(Family::Sqrt2, Rat(7, 10), Rat(3, 1000));
    auto prof = profile(p.alpha, p.omega, Int("1000000000000"));
    RatInterval c = prof.cEstimate.enclose(96);
    Rat tolr = Rat(5) * p.epsilon + Rat(1, 100);
    CHECK(c.lo > Rat(7, 10) - tolr);
    CHECK(c.hi < Rat(7, 10) + tolr);
    // tau family at its lower endpoint analog ~ sqrt(tau) - 1
    auto pt = buildPairForConstant(Family::Tau, Rat(2721, 10000), Rat(3, 1000));
    CHECK(equivalent(pt.omega, golden_ratio_cf()));
    auto proft = profile(pt.alpha, pt.omega, Int("1000000000"));
    RatInterval ct = proft.cEstimate.enclose(96);
    CHECK(ct.lo > Rat(2721, 10000) - tolr);
    CHECK(ct.hi < Rat(2721, 10000) + tolr);
}

TEST_CASE("ratio law: Q_n / X_n approaches theta^{1-x}") {
    auto sol = kroneckerSearch(Rat(1, 2), Rat(3, 1000));
    auto pair = buildOmega(sol);
    auto xs = xSequence(sol, 40);
    auto qs = convergents(silver_ratio_cf(), 40);
    // theta^{1/2} enclosure
    RatInterval th = root_enclosure(enclose(silver_ratio(), 160), 2, 128);
    Rat tol5 = Rat(5) * sol.epsilon;
    for (long n = 30; n < 40; ++n) {
        Rat ratio(qs[n].q, xs[n]);
        CHECK(ratio > th.lo - tol5);
        CHECK(ratio < th.hi + tol5);
    }
}

TEST_CASE("omega denominators satisfy the shifted recurrence") {
    auto pair = buildOmega(kroneckerSearch(Rat(1, 2), Rat(3, 1000)));
    auto cs = convergents(pair.omega, 20);
    for (size_t n = 4; n < cs.size(); ++n)
        CHECK(cs[n].q == 2 * cs[n - 1].q + cs[n - 2].q);
}
