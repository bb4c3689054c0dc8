#pragma once

#include <vector>

#include "imf/psi.hpp"
#include "imf/word.hpp"

namespace imf {

// sign(X - q) for a biquadratic X and a quadratic q, exact even when q's
// radicand is a third field (reduces to a squared comparison).
inline int cmp_quartic_quadirr(const Quartic& X, const QuadIrr& q) {
    Quartic Y = X - Quartic(Rat(q.a(), q.c()));
    if (q.is_rational()) return Y.sign();
    return cmp_with_sqrt(Y, Rat(q.b(), q.c()), q.d());
}

// sign(ratio - (sqrt(base) - 1)) for ratio >= 0: square ratio + 1 once.
inline int cmp_ratio_sqrt_threshold(const Quartic& ratio, const QuadIrr& base) {
    Quartic s = ratio + Quartic(1);
    return cmp_quartic_quadirr(s * s, base);
}

// One piecewise-constant interval [tLo, tHi) of both psi functions.
struct RatioRecord {
    Int tLo, tHi;            // tHi exclusive
    QuadIrr psiA, psiB;      // exact step values
    Quartic diff, minVal, ratio;
    Quartic runningSup;
};

struct RatioProfile {
    std::vector<RatioRecord> records;
    Quartic maxRatio;
    Quartic cEstimate;       // max over the tail window
    size_t windowStart = 0;  // first record index inside the window
    long signChanges = 0;    // sign flips of psiA - psiB across records
};

// Full profile over [1, valueLimit]: intersect the psi step intervals of both
// numbers; the ratio |psiA - psiB| / min(psiA, psiB) is exact on each piece.
// cEstimate approximates the limsup by the max over the last `windowDen`-th
// fraction of records (default: last half).
inline RatioProfile profile(const PartialQuotients& x, const PartialQuotients& y,
                            const Int& valueLimit, unsigned windowDen = 2) {
    if (valueLimit < 1) throw Error(ErrorKind::Parse, "profile valueLimit must be >= 1");
    require_nonintegral_pair(x, y);
    auto ba = detail::psi_blocks(x, valueLimit);
    auto bb = detail::psi_blocks(y, valueLimit);
    RatioProfile out;
    size_t i = 0, j = 0;
    int lastSign = 0;
    while (i < ba.size() && j < bb.size()) {
        Int lo = std::max(ba[i].lo, bb[j].lo);
        Int hi = std::min(ba[i].hi, bb[j].hi);
        if (lo <= hi) {
            RatioRecord r;
            r.tLo = lo;
            r.tHi = hi + 1;
            r.psiA = ba[i].value;
            r.psiB = bb[j].value;
            Quartic A(r.psiA), B(r.psiB);
            Quartic d = A - B;
            int s = d.sign();
            if (s != 0 && lastSign != 0 && s != lastSign) ++out.signChanges;
            if (s != 0) lastSign = s;
            r.diff = d.abs();
            r.minVal = s < 0 ? A : B;
            r.ratio = r.diff / r.minVal;
            r.runningSup = out.records.empty()
                               ? r.ratio
                               : (r.ratio > out.records.back().runningSup
                                      ? r.ratio
                                      : out.records.back().runningSup);
            out.records.push_back(std::move(r));
        }
        if (ba[i].hi <= bb[j].hi) ++i; else ++j;
    }
    if (out.records.empty()) throw Error(ErrorKind::Internal, "empty profile");
    out.maxRatio = out.records.back().runningSup;
    out.windowStart = out.records.size() - out.records.size() / std::max(1u, windowDen);
    if (out.windowStart >= out.records.size()) out.windowStart = out.records.size() - 1;
    out.cEstimate = out.records[out.windowStart].ratio;
    for (size_t k = out.windowStart + 1; k < out.records.size(); ++k)
        if (out.records[k].ratio > out.cEstimate) out.cEstimate = out.records[k].ratio;
    return out;
}

struct TheoremReport {
    bool passed = false;
    Int witnessLo = 0, witnessHi = 0;  // interval where the max ratio is attained
    Quartic maxRatio;
};

// Does max ratio >= sqrt(sqrt(2)+1) - 1 - slack hold on [1, valueLimit]?
// The comparison is exact: the threshold is degree 4, so ratio + 1 + slack is
// squared once and the result compared against sqrt(2) + 1 in the pair's field.
inline TheoremReport verifyMainTheorem(const PartialQuotients& x, const PartialQuotients& y,
                                       const Int& valueLimit, const Rat& slack = Rat(1, 1000000)) {
    if (equivalent_to_golden(x) && equivalent_to_golden(y))
        throw Error(ErrorKind::BothEquivalentToTau,
                    "both numbers are equivalent to the golden ratio");
    RatioProfile p = profile(x, y, valueLimit);
    TheoremReport rep;
    rep.maxRatio = p.maxRatio;
    for (auto& r : p.records) {
        if (cmp_ratio_sqrt_threshold(r.ratio + Quartic(slack), silver_ratio()) >= 0) {
            rep.passed = true;
            rep.witnessLo = r.tLo;
            rep.witnessHi = r.tHi;
            break;
        }
    }
    return rep;
}

struct Lemma6Report {
    bool onInterval = false;  // inequality held for t in [q_r - 1, q_r)
    bool atPoint = false;     // inequality held at t = q_r
};

// At a Q^r letter with tail alpha_{r+1} >= C, the ratio meets sqrt(C) - 1
// either just below q_r or at q_r; reports which branch held.
inline Lemma6Report verifyLemma6(const PartialQuotients& x, const PartialQuotients& y,
                                 long r, const QuadIrr& C) {
    auto cs = convergents(x, r + 1);
    if (static_cast<long>(cs.size()) <= r)
        throw Error(ErrorKind::NoSuchLetter, "expansion has no index r");
    Int qr = cs[r].q;
    Word w = buildWord(x, y, qr);
    bool found = false;
    for (auto& l : w.letters)
        if (l.kind == 'Q' && l.alphaIndex && *l.alphaIndex == r) found = true;
    if (!found)
        throw Error(ErrorKind::NoSuchLetter,
                    "no letter Q at index " + std::to_string(r) + " in the word");
    if (cmp_quartic_quadirr(Quartic(tail(x, r + 1)), C) < 0)
        throw Error(ErrorKind::Parse, "tail alpha_{r+1} below the required constant");
    auto ratio_at = [&](const Int& t) {
        Quartic A(*psi(x, t).exact), B(*psi(y, t).exact);
        Quartic d = (A - B).abs();
        Quartic m = (A - B).sign() < 0 ? A : B;
        return d / m;
    };
    Lemma6Report rep;
    if (qr >= 2)
        rep.onInterval = cmp_ratio_sqrt_threshold(ratio_at(qr - 1), C) >= 0;
    rep.atPoint = cmp_ratio_sqrt_threshold(ratio_at(qr), C) >= 0;
    return rep;
}

struct Remark3Report {
    long qqCount = 0;
    long witnessesChecked = 0;  // TQQ / BQQ subwords examined
    bool allHold = true;        // xi_{n-1} - eta_s >= (tau - 1) xi_n at each
    long sandwichCount = 0;     // q_n <= t_s < q_{n+1} < t_{s+1} < q_{n+2}
    bool sandwichesVerified = true;
};

// For a pair with x ~ tau and y ~ sqrt(2): count QQ subwords and check the
// witness inequality xi_{n-1} - eta_s >= (tau - 1) xi_n at every TQQ or BQQ.
inline Remark3Report verifyRemark3(const PartialQuotients& x, const PartialQuotients& y,
                                   const Int& valueLimit) {
    if (!equivalent_to_golden(x))
        throw Error(ErrorKind::Parse, "first number must be equivalent to the golden ratio");
    if (!equivalent(y, silver_ratio_cf()))
        throw Error(ErrorKind::Parse, "second number must be equivalent to sqrt(2)");
    require_nonintegral_pair(x, y);
    Word w = buildWord(x, y, valueLimit);
    Remark3Report rep;
    rep.qqCount = static_cast<long>(scanQQ(w).size());
    Quartic tauM1 = Quartic(golden_ratio()) - Quartic(1);
    for (size_t i = 0; i + 2 < w.letters.size(); ++i) {
        const auto& a = w.letters[i];
        const auto& b = w.letters[i + 1];
        const auto& c = w.letters[i + 2];
        if (b.kind != 'Q' || c.kind != 'Q') continue;
        if (a.kind != 'T' && a.kind != 'B') continue;
        long n = *b.alphaIndex;
        long s = *a.betaIndex;
        if (n < 1) continue;
        ++rep.witnessesChecked;
        Quartic xin1(*xi(x, n - 1).exact), xin(*xi(x, n).exact);
        Quartic xip1(*xi(x, n + 1).exact), etas(*xi(y, s).exact);
        // dichotomy: xi_n >= eta_s gives xi_{n-1} - eta_s >= (tau-1) xi_n,
        // otherwise eta_s - xi_{n+1} >= (tau-1) xi_{n+1}
        bool holds;
        if ((xin - etas).sign() >= 0)
            holds = (xin1 - etas - tauM1 * xin).sign() >= 0;
        else
            holds = (etas - xip1 - tauM1 * xip1).sign() >= 0;
        if (!holds) rep.allHold = false;
    }
    // sandwich pattern over the raw denominator sequences
    auto dedupe = [](std::vector<Convergent> cs) {
        std::vector<Convergent> out;
        for (size_t i = 0; i < cs.size(); ++i)
            if (i + 1 == cs.size() || cs[i + 1].q != cs[i].q) out.push_back(cs[i]);
        return out;
    };
    auto qa = dedupe(convergents_up_to_value(x, valueLimit));
    auto qb = dedupe(convergents_up_to_value(y, valueLimit));
    for (size_t n = 0; n + 2 < qa.size(); ++n) {
        for (size_t s = 0; s + 1 < qb.size(); ++s) {
            // candidate: t_s falls in [q_n, q_{n+1})
            if (!(qa[n].q <= qb[s].q && qb[s].q < qa[n + 1].q)) continue;
            if (qa[n + 1].q < qb[s + 1].q && qb[s + 1].q < qa[n + 2].q) {
                ++rep.sandwichCount;
                // on [q_{n+1}, t_{s+1}) the steps are xi_{n+1} vs eta_s; the
                // interleaving is vacuous if they coincide, so check exactly
                Quartic xa(*xi(x, qa[n + 1].n).exact), yb(*xi(y, qb[s].n).exact);
                if ((xa - yb).sign() == 0) rep.sandwichesVerified = false;
            }
        }
    }
    return rep;
}

}  // namespace imf
