#pragma once

#include <vector>

#include "imf/cf.hpp"
#include "imf/psi.hpp"

namespace imf {

enum class Family { Sqrt2, Tau };

namespace detail {

// base number of the family: theta = sqrt(2)+1 or tau = (sqrt(5)+1)/2
inline QuadIrr family_base(Family f) {
    return f == Family::Sqrt2 ? silver_ratio() : golden_ratio();
}
inline PartialQuotients family_cf(Family f) {
    return f == Family::Sqrt2 ? silver_ratio_cf() : golden_ratio_cf();
}
inline Int family_period_quotient(Family f) { return f == Family::Sqrt2 ? 2 : 1; }

// A power target T = pow_^(1/root_) with pow_ in the family's field; supports
// exact comparison against field elements by raising to the root_-th power.
struct PowTarget {
    QuadIrr pow_;
    unsigned root_ = 1;

    // sign(v - T)
    int cmp(const QuadIrr& v) const {
        if (root_ == 1) return (v - pow_).sign();
        if (v.sign() <= 0) return -1;  // T > 0
        QuadIrr p(Int(1));
        for (unsigned i = 0; i < root_; ++i) p = p * v;
        return (p - pow_).sign();
    }

    RatInterval enclose(unsigned prec) const {
        RatInterval b = imf::enclose(pow_, prec + 8);
        return root_ == 1 ? b : root_enclosure(b, root_, prec);
    }
};

}  // namespace detail

struct KroneckerSolution {
    Family family = Family::Sqrt2;
    Int U = 0, V = 0;
    Rat achievedError;      // certified rational bound on |V + U/base - target|
    Rat xParam;             // exponent of the target base^x (reporting)
    Rat epsilon;
    detail::PowTarget target;
};

struct ExtremalPair {
    PartialQuotients alpha = PartialQuotients::rational(0, {});  // the base number
    PartialQuotients omega = PartialQuotients::rational(0, {});
    Rat xParam, epsilon, achievedError;
    Int U = 0, V = 0;
    long k = 0, n0 = 0;
    Family family = Family::Sqrt2;
};

namespace detail {

inline KroneckerSolution kronecker_search_target(Family fam, PowTarget target,
                                                 const Rat& xParam, const Rat& epsilon,
                                                 const Int& uBound) {
    if (epsilon <= 0) throw Error(ErrorKind::Parse, "epsilon must be positive");
    QuadIrr invBase = family_base(fam).inverse();  // sqrt(2)-1 or tau-1
    RatInterval tEnc = target.enclose(192);
    RatInterval invEnc = enclose(invBase, 192);
    for (Int u = 1; u <= uBound; ++u) {
        RatInterval g = tEnc - RatInterval(Rat(u)) * invEnc;  // ideal V
        Int v0 = floor_rat(g.mid());
        for (Int v : {v0, Int(v0 + 1)}) {
            if (boost::multiprecision::gcd(u, abs(v)) != 1) continue;  // X_n would share the gcd
            QuadIrr a = invBase * u + QuadIrr(v);
            if (a.sign() <= 0) continue;  // closed-form leading coefficient must be > 0
            // |a - T| < eps, decided exactly by comparing a -+ eps against T
            if (target.cmp(a - QuadIrr(epsilon)) >= 0) continue;
            if (target.cmp(a + QuadIrr(epsilon)) <= 0) continue;
            KroneckerSolution sol;
            sol.family = fam;
            sol.U = u;
            sol.V = v;
            sol.xParam = xParam;
            sol.epsilon = epsilon;
            sol.target = target;
            RatInterval err = enclose(a, 192) - tEnc;
            sol.achievedError = std::max(Rat(-err.lo), err.hi);
            return sol;
        }
    }
    throw Error(ErrorKind::SearchBoundExceeded,
                "no Kronecker solution below U = " + uBound.str());
}

}  // namespace detail

// Integers U, V with |V + U/base - base^x| < epsilon, smallest U first.
inline KroneckerSolution kroneckerSearch(const Rat& x, const Rat& epsilon,
                                         Family fam = Family::Sqrt2,
                                         const Int& uBound = Int(1000000)) {
    if (x <= 0 || x >= 1) throw Error(ErrorKind::Parse, "exponent must lie in (0, 1)");
    detail::PowTarget t;
    t.root_ = static_cast<unsigned>(denominator(x));
    t.pow_ = QuadIrr(Int(1));
    for (Int p = 0; p < numerator(x); ++p) t.pow_ = t.pow_ * detail::family_base(fam);
    return detail::kronecker_search_target(fam, t, x, epsilon, uBound);
}

// X_0 = U, X_1 = V, X_{n+1} = c X_n + X_{n-1} with c = 2 (sqrt2) or 1 (tau).
inline std::vector<Int> xSequence(const KroneckerSolution& sol, long count) {
    if (count < 2) throw Error(ErrorKind::Parse, "xSequence needs count >= 2");
    Int c = detail::family_period_quotient(sol.family);
    std::vector<Int> xs = {sol.U, sol.V};
    while (static_cast<long>(xs.size()) < count)
        xs.push_back(c * xs.back() + xs[xs.size() - 2]);
    return xs;
}

// Closed form X_n = A base^n + B (-base)^{-n} with A = (V + U/base)/s and
// B = U - A, where s = base + 1/base (2*sqrt(2) resp. sqrt(5)); exact.
inline QuadIrr xClosedForm(const KroneckerSolution& sol, long n) {
    QuadIrr base = detail::family_base(sol.family);
    QuadIrr inv = base.inverse();
    QuadIrr A = (QuadIrr(sol.V) + inv * sol.U) / (base + inv);
    QuadIrr B = QuadIrr(sol.U) - A;
    QuadIrr p(Int(1)), q(Int(1));
    for (long i = 0; i < n; ++i) { p = p * base; q = q * (-inv); }
    return A * p + B * q;
}

// Splice step: expand X_{k-1}/X_k with the smallest admissible k, reverse the
// quotients, append the family's period.  The continuant symmetry makes the
// denominators of omega continue the X sequence.
inline ExtremalPair buildOmega(const KroneckerSolution& sol) {
    auto xs = xSequence(sol, 64);
    long k = -1;
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i - 1] >= 1 && xs[i] >= 1 && xs[i - 1] < xs[i]) { k = static_cast<long>(i); break; }
    if (k < 0)
        throw Error(ErrorKind::NoPositiveWindow,
                    "X sequence never strictly increases through positive values");
    PartialQuotients frac = expand(QuadIrr(Rat(xs[k - 1], xs[k])));  // [0; b_l, ..., b_1]
    std::vector<Int> rev(frac.preperiod().rbegin(), frac.preperiod().rend());
    long l = static_cast<long>(rev.size());
    ExtremalPair pair;
    pair.family = sol.family;
    pair.alpha = detail::family_cf(sol.family);
    pair.omega = PartialQuotients::periodic(0, std::move(rev),
                                            {detail::family_period_quotient(sol.family)});
    pair.xParam = sol.xParam;
    pair.epsilon = sol.epsilon;
    pair.achievedError = sol.achievedError;
    pair.U = sol.U;
    pair.V = sol.V;
    pair.k = k;
    pair.n0 = l - k;  // q_l = X_k by continuant symmetry, so s_n = X_{n - n0}
    require_nonintegral_pair(pair.alpha, pair.omega);
    // denominators of omega must continue the X sequence: s_n = X_{n-n0}
    auto cs = convergents(pair.omega, l + 8);
    for (long n = l - 1; n < static_cast<long>(cs.size()); ++n) {
        long m = n - pair.n0;
        if (m >= 0 && m < static_cast<long>(xs.size()) && cs[n].q != xs[m])
            throw Error(ErrorKind::Internal, "omega denominators do not match the X sequence");
    }
    return pair;
}

// Solve max(base^x, base^{1-x}) - 1 = targetC on the monotone branch x >= 1/2:
// the Kronecker target becomes the rational 1 + targetC directly.
inline ExtremalPair buildPairForConstant(Family fam, const Rat& targetC, const Rat& epsilon,
                                         const Int& uBound = Int(1000000)) {
    QuadIrr base = detail::family_base(fam);
    // admissible range [sqrt(base) - 1, base - 1)
    QuadIrr t1 = (QuadIrr(targetC) + QuadIrr(Int(1)));
    if ((t1 * t1 - base).sign() < 0 || (QuadIrr(targetC) - (base - QuadIrr(Int(1)))).sign() >= 0)
        throw Error(ErrorKind::TargetOutOfRange,
                    "target constant outside [sqrt(base)-1, base-1)");
    detail::PowTarget t;
    t.root_ = 1;
    t.pow_ = t1;
    // xParam = log_base(1 + targetC), presentation only
    RatInterval tb = enclose(t1, 64), bb = enclose(base, 64);
    double xd = std::log(static_cast<double>(tb.mid())) / std::log(static_cast<double>(bb.mid()));
    Rat x(Int(static_cast<long long>(xd * 1e9 + 0.5)), Int(1000000000));
    KroneckerSolution sol = detail::kronecker_search_target(fam, t, x, epsilon, uBound);
    return buildOmega(sol);
}

inline ExtremalPair buildPairForX(Family fam, const Rat& x, const Rat& epsilon,
                                  const Int& uBound = Int(1000000)) {
    return buildOmega(kroneckerSearch(x, epsilon, fam, uBound));
}

// Denominators of theta's convergents in closed form:
//   Q_n = ((2 + sqrt(2)) theta^n + (2 - sqrt(2)) (-theta)^{-n}) / 4
inline QuadIrr pellClosedForm(long n) {
    QuadIrr th = silver_ratio(), inv = th.inverse();
    QuadIrr s2(0, 1, 1, 2);
    QuadIrr p(Int(1)), q(Int(1));
    for (long i = 0; i < n; ++i) { p = p * th; q = q * (-inv); }
    return ((QuadIrr(Int(2)) + s2) * p + (QuadIrr(Int(2)) - s2) * q) / QuadIrr(Int(4));
}

}  // namespace imf
