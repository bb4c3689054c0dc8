#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "imf/errors.hpp"
#include "imf/integer.hpp"
#include "imf/interval.hpp"
#include "imf/quadirr.hpp"

namespace imf {

enum class CFKind {
    Rational,  // finite expansion, canonical (last quotient >= 2 unless [a0])
    Periodic,  // eventually periodic: a quadratic irrational
    Stream,    // finite known prefix of an otherwise unknown expansion
};

// Indexed convergent p_n/q_n; q_{-1} = 0 by convention.
struct Convergent {
    long n;
    Int p, q;
};

// A continued fraction expansion [a0; a1, a2, ...].
//
// Rational: quotients are a0 followed by `pre`.
// Periodic: a0, pre, then `period` repeating forever; stored minimal
//   (primitive period, shortest preperiod).
// Stream: a0 and pre are known, nothing beyond index pre.size() is.
class PartialQuotients {
public:
    static PartialQuotients rational(Int a0, std::vector<Int> pre) {
        PartialQuotients x;
        x.kind_ = CFKind::Rational;
        x.a0_ = std::move(a0);
        x.pre_ = std::move(pre);
        x.validate_positive();
        // canonical finite form: last quotient >= 2 (except the bare [a0])
        if (!x.pre_.empty() && x.pre_.back() == 1) {
            x.pre_.pop_back();
            if (x.pre_.empty()) x.a0_ += 1;
            else x.pre_.back() += 1;
        }
        return x;
    }

    static PartialQuotients periodic(Int a0, std::vector<Int> pre, std::vector<Int> period) {
        if (period.empty())
            throw Error(ErrorKind::Parse, "periodic expansion needs a nonempty period");
        PartialQuotients x;
        x.kind_ = CFKind::Periodic;
        x.a0_ = std::move(a0);
        x.pre_ = std::move(pre);
        x.period_ = std::move(period);
        x.validate_positive();
        x.canonicalize_period();
        return x;
    }

    static PartialQuotients stream(Int a0, std::vector<Int> pre) {
        PartialQuotients x;
        x.kind_ = CFKind::Stream;
        x.a0_ = std::move(a0);
        x.pre_ = std::move(pre);
        x.validate_positive();
        return x;
    }

    CFKind kind() const { return kind_; }
    const Int& a0() const { return a0_; }
    const std::vector<Int>& preperiod() const { return pre_; }
    const std::vector<Int>& period() const { return period_; }

    // Number of quotients known without periodic continuation (incl. a0).
    long horizon() const {
        return kind_ == CFKind::Periodic ? -1 : static_cast<long>(pre_.size()) + 1;
    }

    bool finite() const { return kind_ == CFKind::Rational; }

    // a_i; for Periodic any i >= 0, otherwise i must be within range.
    Int quotient(long i) const {
        if (i == 0) return a0_;
        long m = static_cast<long>(pre_.size());
        if (i <= m) return pre_[i - 1];
        if (kind_ == CFKind::Periodic)
            return period_[(i - 1 - m) % static_cast<long>(period_.size())];
        if (kind_ == CFKind::Rational)
            throw Error(ErrorKind::Internal, "quotient index past end of finite expansion");
        throw Error(ErrorKind::HorizonExhausted,
                    "quotient index " + std::to_string(i) + " beyond stream horizon");
    }

    // Index one past the last quotient for finite expansions.
    long length() const { return static_cast<long>(pre_.size()) + 1; }

    bool operator==(const PartialQuotients& o) const {
        return kind_ == o.kind_ && a0_ == o.a0_ && pre_ == o.pre_ && period_ == o.period_;
    }

    friend std::ostream& operator<<(std::ostream& os, const PartialQuotients& x) {
        os << "[" << x.a0_;
        if (!x.pre_.empty() || !x.period_.empty() || x.kind_ == CFKind::Stream) os << ";";
        bool first = true;
        for (auto& a : x.pre_) {
            os << (first ? " " : ", ") << a;
            first = false;
        }
        if (!x.period_.empty()) {
            os << (first ? " (" : ", (");
            for (size_t i = 0; i < x.period_.size(); ++i)
                os << (i ? ", " : "") << x.period_[i];
            os << ")";
        }
        if (x.kind_ == CFKind::Stream) os << (first ? " ..." : ", ...");
        os << "]";
        return os;
    }

private:
    void validate_positive() const {
        for (auto& a : pre_)
            if (a < 1) throw Error(ErrorKind::Parse, "partial quotients must be >= 1");
        for (auto& a : period_)
            if (a < 1) throw Error(ErrorKind::Parse, "partial quotients must be >= 1");
    }

    void canonicalize_period() {
        // primitive period
        size_t L = period_.size();
        for (size_t p = 1; p <= L / 2; ++p) {
            if (L % p) continue;
            bool rep = true;
            for (size_t i = p; i < L && rep; ++i) rep = period_[i] == period_[i % p];
            if (rep) {
                period_.resize(p);
                break;
            }
        }
        // shortest preperiod: absorb matching tail of pre_ into a rotation
        while (!pre_.empty() && pre_.back() == period_.back()) {
            pre_.pop_back();
            period_.insert(period_.begin(), period_.back());
            period_.pop_back();
        }
    }

    CFKind kind_ = CFKind::Rational;
    Int a0_ = 0;
    std::vector<Int> pre_;
    std::vector<Int> period_;
};

// <a_1,...,a_n>: denominator of [0; a_1,...,a_n].  Empty list gives 1,
// a single entry gives itself (the recurrence base cases).
inline Int continuant(const std::vector<Int>& a) {
    Int km1 = 0, k = 1;  // <> = 1
    for (auto& ai : a) {
        if (ai < 1) throw Error(ErrorKind::Parse, "continuant entries must be >= 1");
        Int next = ai * k + km1;
        km1 = k;
        k = next;
    }
    return k;
}

// F_1 = F_2 = 1, F_{n+1} = F_n + F_{n-1}
inline Int fibonacci(long n) {
    if (n < 1) throw Error(ErrorKind::Parse, "fibonacci index must be >= 1");
    Int a = 1, b = 1;  // F_1, F_2
    for (long i = 1; i < n; ++i) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// First `upTo` convergents (n = 0 .. upTo-1) by the standard recurrence.
inline std::vector<Convergent> convergents(const PartialQuotients& x, long upTo) {
    if (upTo < 1) throw Error(ErrorKind::Parse, "convergent count must be >= 1");
    std::vector<Convergent> out;
    out.reserve(upTo);
    Int pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
    Int p = x.a0(), q = 1;
    out.push_back({0, p, q});
    for (long n = 1; n < upTo; ++n) {
        if (x.kind() == CFKind::Rational && n >= x.length()) break;
        Int a = x.quotient(n);  // throws HorizonExhausted in stream mode
        Int pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p; qm1 = q;
        p = pn; q = qn;
        out.push_back({n, p, q});
    }
    return out;
}

// All convergents with denominator <= limit (every index, including the
// duplicate q_0 = q_1 = 1 when a_1 = 1).
inline std::vector<Convergent> convergents_up_to_value(const PartialQuotients& x, const Int& limit) {
    std::vector<Convergent> out;
    Int pm1 = 1, qm1 = 0;
    Int p = x.a0(), q = 1;
    long n = 0;
    while (q <= limit) {
        out.push_back({n, p, q});
        ++n;
        if (x.kind() == CFKind::Rational && n >= x.length()) break;
        Int a = x.quotient(n);
        Int pn = a * p + pm1, qn = a * q + qm1;
        pm1 = p; qm1 = q;
        p = pn; q = qn;
    }
    return out;
}

// Tail alpha_r = [a_r; a_{r+1}, ...] as an exact field element.
inline QuadIrr tail(const PartialQuotients& x, long r) {
    if (r < 0) throw Error(ErrorKind::Parse, "tail index must be >= 0");
    if (x.kind() == CFKind::Stream)
        throw Error(ErrorKind::TailNotExact,
                    "stream-backed expansion has no exact tail; use interval mode");
    if (x.kind() == CFKind::Rational) {
        if (r >= x.length())
            throw Error(ErrorKind::TailNotExact, "tail index past end of finite expansion");
        QuadIrr v(x.quotient(x.length() - 1));
        for (long i = x.length() - 2; i >= r; --i)
            v = QuadIrr(x.quotient(i)) + v.inverse();
        return v;
    }
    long m = static_cast<long>(x.preperiod().size());
    long L = static_cast<long>(x.period().size());
    // purely periodic tail at the first index >= max(r, m+1)
    long start = std::max(r, m + 1);
    long off = (start - m - 1) % L;
    std::vector<Int> cyc(L);
    for (long i = 0; i < L; ++i) cyc[i] = x.period()[(off + i) % L];
    // y = [c_0; c_1,...,c_{L-1}, y] => k_{L-1} y^2 + (k_{L-2} - h_{L-1}) y - h_{L-2} = 0
    Int hm1 = 1, km1 = 0, h = cyc[0], k = 1;
    for (long i = 1; i < L; ++i) {
        Int hn = cyc[i] * h + hm1, kn = cyc[i] * k + km1;
        hm1 = h; km1 = k;
        h = hn; k = kn;
    }
    Int A = k, B = km1 - h, C = -hm1;
    Int disc = B * B - 4 * A * C;
    QuadIrr y(-B, 1, 2 * A, disc);  // positive root (> 1)
    for (long i = start - 1; i >= r; --i)
        y = QuadIrr(x.quotient(i)) + y.inverse();
    return y;
}

// Exact value of an eventually periodic or finite expansion.
inline QuadIrr evaluate(const PartialQuotients& x) { return tail(x, 0); }

// Canonical expansion of an exact real; finite for rationals, eventually
// periodic (with minimal preperiod/period) for quadratic irrationals.
inline PartialQuotients expand(const QuadIrr& x0) {
    if (x0.is_rational()) {
        Int num = x0.a(), den = x0.c();
        Int a0 = floor_div(num, den);
        std::vector<Int> pre;
        Int r = num - a0 * den;  // x = a0 + r/den, 0 <= r < den
        Int p = den, q = r;
        while (q != 0) {
            Int a = p / q;
            pre.push_back(a);
            Int rem = p % q;
            p = q;
            q = rem;
        }
        return PartialQuotients::rational(a0, std::move(pre));
    }
    std::vector<Int> quots;
    auto key_cmp = [](const QuadIrr& u, const QuadIrr& v) { return key_less(u, v); };
    std::map<QuadIrr, size_t, decltype(key_cmp)> seen(key_cmp);
    QuadIrr x = x0;
    Int a0 = x.floor();
    x = (x - QuadIrr(a0)).inverse();  // complete quotient x_1
    while (true) {
        auto it = seen.find(x);
        if (it != seen.end()) {
            size_t start = it->second;
            std::vector<Int> pre(quots.begin(), quots.begin() + start);
            std::vector<Int> period(quots.begin() + start, quots.end());
            return PartialQuotients::periodic(a0, std::move(pre), std::move(period));
        }
        seen.emplace(x, quots.size());
        Int a = x.floor();
        quots.push_back(a);
        x = (x - QuadIrr(a)).inverse();
    }
}

// alpha ~_c beta: some tails coincide.  Decided on minimal periods up to
// cyclic rotation; two rationals are equivalent (both have tail 0... they
// terminate), a rational is never equivalent to an irrational.
inline bool equivalent(const PartialQuotients& x, const PartialQuotients& y) {
    if (x.kind() == CFKind::Stream || y.kind() == CFKind::Stream)
        throw Error(ErrorKind::EquivalenceUndecidable,
                    "equivalence undecidable for stream-backed expansions");
    if (x.kind() == CFKind::Rational || y.kind() == CFKind::Rational)
        return x.kind() == y.kind();
    const auto& p = x.period();
    const auto& q = y.period();
    if (p.size() != q.size()) return false;
    size_t L = p.size();
    for (size_t s = 0; s < L; ++s) {
        bool match = true;
        for (size_t i = 0; i < L && match; ++i) match = p[(s + i) % L] == q[i];
        if (match) return true;
    }
    return false;
}

inline bool equivalent_to_golden(const PartialQuotients& x) {
    return x.kind() == CFKind::Periodic && x.period().size() == 1 && x.period()[0] == 1;
}

// tau = (sqrt(5)+1)/2 = [1; (1)]
inline PartialQuotients golden_ratio_cf() { return PartialQuotients::periodic(1, {}, {1}); }
inline QuadIrr golden_ratio() { return QuadIrr(1, 1, 2, 5); }

// theta = sqrt(2)+1 = [2; (2)]
inline PartialQuotients silver_ratio_cf() { return PartialQuotients::periodic(2, {}, {2}); }
inline QuadIrr silver_ratio() { return QuadIrr(1, 1, 1, 2); }

// Enclosure of the value of any expansion from truncations; `terms` counts
// quotients past a0 to use.  Consecutive truncations bracket the value.
inline RatInterval evaluate_enclosure(const PartialQuotients& x, long terms) {
    long maxi = terms;
    if (x.kind() == CFKind::Rational) maxi = std::min(maxi, x.length() - 1);
    if (x.kind() == CFKind::Stream) maxi = std::min(maxi, x.horizon() - 1);
    if (x.kind() == CFKind::Rational && maxi == x.length() - 1) {
        Rat v = evaluate(x).rational_value();
        return {v, v};
    }
    // value lies between [a0;...,a_maxi] and [a0;...,a_maxi + 1]
    Rat lo, hi;
    for (int bump = 0; bump < 2; ++bump) {
        Rat v(x.quotient(maxi) + bump);
        for (long i = maxi - 1; i >= 0; --i) v = Rat(x.quotient(i)) + 1 / v;
        (bump ? hi : lo) = v;
    }
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

}  // namespace imf
