// Acceptance gate: exercises the headline guarantees end to end and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "imf/extremal.hpp"
#include "imf/ratio.hpp"

using namespace imf;

namespace {

bool g_ok = true;

#define CHECK_TRUE(cond)                                                          \
    do {                                                                          \
        if (!(cond)) {                                                            \
            g_ok = false;                                                         \
            std::cerr << "    check failed: " #cond " (line " << __LINE__ << ")\n"; \
        }                                                                         \
    } while (0)

PartialQuotients randomNumber(std::mt19937& rng) {
    std::uniform_int_distribution<int> quot(1, 4), a0d(0, 3), preLen(0, 4), perLen(1, 3);
    std::vector<Int> pre, per;
    int np = preLen(rng), nq = perLen(rng);
    for (int i = 0; i < np; ++i) pre.push_back(quot(rng));
    for (int i = 0; i < nq; ++i) per.push_back(quot(rng));
    return PartialQuotients::periodic(a0d(rng), std::move(pre), std::move(per));
}

std::pair<PartialQuotients, PartialQuotients> randomPair(std::mt19937& rng,
                                                         bool notBothGolden) {
    for (;;) {
        PartialQuotients a = randomNumber(rng), b = randomNumber(rng);
        if (notBothGolden && equivalent_to_golden(a) && equivalent_to_golden(b)) continue;
        try {
            require_nonintegral_pair(a, b);
        } catch (const Error&) {
            continue;
        }
        return {a, b};
    }
}

QuadIrr bruteDist(const QuadIrr& v) {
    QuadIrr d = v - QuadIrr((v + QuadIrr(Rat(1, 2))).floor());
    return d.sign() < 0 ? -d : d;
}

// --- criteria ---------------------------------------------------------------

// Constructed pair at x = 1/2 reproduces the extremal constant.
void criterion1() {
    ExtremalPair p = buildPairForX(Family::Sqrt2, Rat(1, 2), Rat(3, 1000));
    CHECK_TRUE(p.U == 11 && p.V == -3);
    RatioProfile prof = profile(p.alpha, p.omega, Int("1000000000000"));
    RatInterval c = prof.cEstimate.enclose(96);
    CHECK_TRUE(c.lo >= Rat(5437, 10000));
    CHECK_TRUE(c.hi <= Rat(5637, 10000));
}

// Universal floor: every pair reaches ratio 0.27201 by 10^9.
void criterion2() {
    std::mt19937 rng(271801);
    for (int i = 0; i < 50; ++i) {
        auto [a, b] = randomPair(rng, false);
        RatioProfile p = profile(a, b, Int(1000000000));
        CHECK_TRUE((p.maxRatio - Quartic(Rat(27201, 100000))).sign() >= 0);
    }
}

// Pairs not both equivalent to the golden ratio reach sqrt(sqrt(2)+1) - 1.
void criterion3() {
    std::mt19937 rng(553774);
    for (int i = 0; i < 50; ++i) {
        auto [a, b] = randomPair(rng, true);
        RatioProfile p = profile(a, b, Int(1000000000));
        CHECK_TRUE(cmp_ratio_sqrt_threshold(p.maxRatio, silver_ratio()) >= 0);
    }
}

// The family hits max(theta^x, theta^{1-x}) - 1 within 5 eps + 0.01.
void criterion4() {
    Rat eps(3, 1000);
    Rat tol = Rat(5) * eps + Rat(1, 100);
    for (Rat x : {Rat(1, 2), Rat(3, 5), Rat(3, 4)}) {
        ExtremalPair p = buildPairForX(Family::Sqrt2, x, eps);
        RatioProfile prof = profile(p.alpha, p.omega, Int("1000000000000"));
        RatInterval c = prof.cEstimate.enclose(96);
        Rat m = std::max(x, Rat(1 - x));
        QuadIrr pw(Int(1));
        for (Int i = 0; i < numerator(m); ++i) pw = pw * silver_ratio();
        RatInterval target =
            root_enclosure(enclose(pw, 160), static_cast<unsigned>(denominator(m)), 128) -
            RatInterval(Rat(1));
        CHECK_TRUE(c.lo >= target.lo - tol);
        CHECK_TRUE(c.hi <= target.hi + tol);
    }
}

// Every profile piece agrees with a brute-force recomputation of psi.
void criterion5() {
    std::mt19937 rng(1000);
    for (int i = 0; i < 20; ++i) {
        auto [a, b] = randomPair(rng, false);
        QuadIrr va = evaluate(a), vb = evaluate(b);
        // incremental prefix minima of ||q a||, ||q b||
        std::vector<QuadIrr> minA, minB;
        QuadIrr bestA(Int(1)), bestB(Int(1));
        for (long q = 1; q <= 1000; ++q) {
            QuadIrr da = bruteDist(va * Int(q)), db = bruteDist(vb * Int(q));
            if (da < bestA) bestA = da;
            if (db < bestB) bestB = db;
            minA.push_back(bestA);
            minB.push_back(bestB);
        }
        RatioProfile p = profile(a, b, 1000);
        for (auto& r : p.records)
            for (Int t = r.tLo; t < r.tHi; ++t) {
                long ti = t.convert_to<long>();
                CHECK_TRUE(minA[ti - 1] == r.psiA);
                CHECK_TRUE(minB[ti - 1] == r.psiB);
                Quartic d = (Quartic(r.psiA) - Quartic(r.psiB)).abs();
                Quartic m = (Quartic(r.psiA) - Quartic(r.psiB)).sign() < 0 ? Quartic(r.psiA)
                                                                           : Quartic(r.psiB);
                CHECK_TRUE((r.ratio * m - d).sign() == 0);
            }
    }
}

// Exact identity suite: xi recursion, determinants, continuants, Pell.
void criterion6() {
    std::mt19937 rng(6);
    for (int i = 0; i < 20; ++i) {
        PartialQuotients x = randomNumber(rng);
        for (long n = 1; n <= 50; ++n)
            CHECK_TRUE(*xi(x, n - 1).exact == tail(x, n + 1) * *xi(x, n).exact);
        auto cs = convergents(x, 60);
        for (size_t n = 1; n < cs.size(); ++n) {
            Int det = cs[n].p * cs[n - 1].q - cs[n - 1].p * cs[n].q;
            CHECK_TRUE(det == (n % 2 ? 1 : -1));
        }
    }
    std::uniform_int_distribution<int> quot(1, 4), len(2, 12);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> a;
        int n = len(rng);
        for (int i = 0; i < n; ++i) a.push_back(quot(rng));
        std::vector<Int> rev(a.rbegin(), a.rend());
        CHECK_TRUE(continuant(a) == continuant(rev));
        // splitting: K(a_1..a_n) = K(a_1..a_k) K(a_{k+1}..a_n)
        //                          + K(a_1..a_{k-1}) K(a_{k+2}..a_n)
        std::uniform_int_distribution<int> cut(1, n - 1);
        int k = cut(rng);
        std::vector<Int> L(a.begin(), a.begin() + k), Lm(a.begin(), a.begin() + (k - 1));
        std::vector<Int> R(a.begin() + k, a.end()), Rm(a.begin() + std::min(n, k + 1), a.end());
        CHECK_TRUE(continuant(a) ==
                   continuant(L) * continuant(R) + continuant(Lm) * continuant(Rm));
    }
    auto qs = convergents(silver_ratio_cf(), 41);
    Rat w30(1, Int("1000000000000000000000000000000"));
    for (long n = 0; n <= 40; ++n) {
        QuadIrr v = pellClosedForm(n);
        CHECK_TRUE(v.is_rational() && v.rational_value() == Rat(qs[n].q));
        RatInterval e = enclose(v, 128);
        CHECK_TRUE(e.width() <= w30 && e.contains(Rat(qs[n].q)));
    }
}

// Lemma suite: tails at quotient 2, denominator dominance, Q-letter ratios.
void criterion7() {
    std::mt19937 rng(7);
    // a_n = 2 forces max(alpha_n, alpha_{n+1}) >= sqrt(2) + 1
    long positions = 0;
    for (int i = 0; i < 20; ++i) {
        PartialQuotients x = randomNumber(rng);
        for (long n = 1; n <= 40; ++n) {
            if (x.quotient(n) != 2) continue;
            ++positions;
            QuadIrr a = tail(x, n), b = tail(x, n + 1);
            QuadIrr m = a < b ? b : a;
            CHECK_TRUE((Quartic(m) - Quartic(silver_ratio())).sign() >= 0);
        }
    }
    CHECK_TRUE(positions > 20);
    // q_{n+1} <= t_s with s, n >= 2 forces xi_{n-1} > eta_{s-1}
    long dominancePairs = 0;
    for (int i = 0; i < 20; ++i) {
        auto [a, b] = randomPair(rng, false);
        auto qa = convergents_up_to_value(a, Int(1000000));
        auto qb = convergents_up_to_value(b, Int(1000000));
        for (size_t n = 2; n + 1 < qa.size(); ++n)
            for (size_t s = 2; s < qb.size(); ++s) {
                if (!(qa[n + 1].q <= qb[s].q)) continue;
                ++dominancePairs;
                CHECK_TRUE((Quartic(*xi(a, static_cast<long>(n) - 1).exact) -
                            Quartic(*xi(b, static_cast<long>(s) - 1).exact)).sign() > 0);
            }
    }
    CHECK_TRUE(dominancePairs > 100);
    // ratio disjunction at every Q letter whose tail is at least sqrt(2) + 1
    long qLetters = 0;
    std::vector<std::pair<PartialQuotients, PartialQuotients>> pairs = {
        {silver_ratio_cf(), golden_ratio_cf()},
        {silver_ratio_cf(), PartialQuotients::periodic(0, {2, 2, 1}, {2})},
    };
    for (int i = 0; i < 4; ++i) pairs.push_back(randomPair(rng, false));
    for (auto& [a, b] : pairs) {
        Word w = buildWord(a, b, Int(1000000));
        for (auto& l : w.letters) {
            if (l.kind != 'Q' || !l.alphaIndex || *l.alphaIndex < 1) continue;
            if (cmp_quartic_quadirr(Quartic(tail(a, *l.alphaIndex + 1)), silver_ratio()) < 0)
                continue;
            ++qLetters;
            auto rep = verifyLemma6(a, b, *l.alphaIndex, silver_ratio());
            CHECK_TRUE(rep.onInterval || rep.atPoint);
        }
    }
    CHECK_TRUE(qLetters >= 5);
}

// Sign changes and near-hit counts keep growing with the value limit.
void criterion8() {
    std::mt19937 rng(8);
    std::vector<std::pair<PartialQuotients, PartialQuotients>> pairs = {
        {golden_ratio_cf(), silver_ratio_cf()},
    };
    for (int i = 0; i < 9; ++i) pairs.push_back(randomPair(rng, false));
    for (auto& [a, b] : pairs) {
        // near-hit counts: nondecreasing each decade, strictly more every two;
        // sign changes: strictly more each decade, both directions
        std::vector<Int> fs, rs;
        long prevS = -1;
        for (Int lim(10000); lim <= Int(100000000); lim *= 10) {
            fs.push_back(dubickas_witness_count(a, b, lim));
            rs.push_back(dubickas_witness_count(b, a, lim));
            long s = profile(a, b, lim).signChanges;
            CHECK_TRUE(s > prevS);
            prevS = s;
        }
        for (size_t i = 1; i < fs.size(); ++i) {
            CHECK_TRUE(fs[i] >= fs[i - 1]);
            CHECK_TRUE(rs[i] >= rs[i - 1]);
            if (i >= 2) {
                CHECK_TRUE(fs[i] > fs[i - 2]);
                CHECK_TRUE(rs[i] > rs[i - 2]);
            }
        }
        // monotone under doubling all the way up
        Int prevF = -1;
        for (Int lim(10000); lim <= Int(100000000); lim *= 2) {
            Int f = dubickas_witness_count(a, b, lim);
            CHECK_TRUE(f >= prevF);
            prevF = f;
        }
    }
}

// QQ subwords of (tau, theta) keep appearing; sandwiches verified exactly.
void criterion9() {
    long prevQQ = 0;
    for (Int lim : {Int(1000), Int(1000000), Int(1000000000)}) {
        auto rep = verifyRemark3(golden_ratio_cf(), silver_ratio_cf(), lim);
        CHECK_TRUE(rep.qqCount > prevQQ);
        CHECK_TRUE(rep.allHold);
        CHECK_TRUE(rep.sandwichCount > 0);
        CHECK_TRUE(rep.sandwichesVerified);
        prevQQ = rep.qqCount;
    }
}

struct Criterion {
    const char* name;
    std::function<void()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> crits = {
        {"extremal pair at x = 1/2 reproduces 0.5538 within the window", criterion1},
        {"50 random pairs reach ratio 0.27201 by 1e9", criterion2},
        {"50 pairs not both ~golden reach sqrt(sqrt(2)+1) - 1", criterion3},
        {"family hits max(theta^x, theta^(1-x)) - 1 for x in {.5,.6,.75}", criterion4},
        {"profiles match brute-force psi on 20 pairs up to 1e3", criterion5},
        {"identity suite: xi recursion, determinants, continuants, Pell", criterion6},
        {"lemma suite: quotient-2 tails, dominance, Q-letter ratios", criterion7},
        {"sign changes and near-hit counts grow without bound", criterion8},
        {"QQ subwords of (tau, theta) recur; sandwiches exact", criterion9},
    };
    int failures = 0;
    for (size_t i = 0; i < crits.size(); ++i) {
        g_ok = true;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crits[i].run();
        } catch (const std::exception& e) {
            g_ok = false;
            std::cerr << "    exception: " << e.what() << "\n";
        }
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "[" << i + 1 << "/9] " << crits[i].name << ": "
                  << (g_ok ? "PASS" : "FAIL") << " (" << dt << "s)" << std::endl;
        if (!g_ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
