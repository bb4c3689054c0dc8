#pragma once

#include <optional>
#include <vector>

#include "imf/cf.hpp"
#include "imf/quartic.hpp"

namespace imf {

enum class Mode { Exact, Interval };

// psi_x(t), xi_n or ||q x||: exact field element when the input allows it,
// otherwise a certified enclosure of width <= the requested tolerance.
struct PsiValue {
    std::optional<QuadIrr> exact;
    RatInterval box;
    long sourceIndex = 0;  // the r of psi = 1/(q_r alpha_{r+1} + q_{r-1})

    bool is_exact() const { return exact.has_value(); }

    // sign(this - other), decided exactly or by disjoint enclosures
    int compare(const PsiValue& o) const {
        if (exact && o.exact) return (*exact - *o.exact).sign();
        int d = disjoint_compare(box, o.box);
        if (d == 0)
            throw Error(ErrorKind::PrecisionUnreachable,
                        "overlapping enclosures; re-evaluate with smaller tolerance");
        return d;
    }
};

namespace detail {

inline unsigned prec_for_tol(const Rat& tol) {
    unsigned p = 16;
    while (Rat(4, Int(1) << p) > tol && p < 1u << 20) p += 16;
    return p;
}

// Bracketing enclosure of the tail [a_r; a_{r+1}, ...] from `terms` quotients
// past a_r; terms must not exceed what the expansion knows.
inline RatInterval tail_enclosure(const PartialQuotients& x, long r, long terms) {
    long maxi = r + terms;
    Rat lo, hi;
    for (int bump = 0; bump < 2; ++bump) {
        Rat v(x.quotient(maxi) + bump);
        for (long i = maxi - 1; i >= r; --i) v = Rat(x.quotient(i)) + 1 / v;
        (bump ? hi : lo) = v;
    }
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

// psi from a resolved index r with q_r, q_{r-1} known.
inline PsiValue psi_at_index(const PartialQuotients& x, long r, const Int& qr,
                             const Int& qrm1, Mode mode, const Rat& tol) {
    PsiValue out;
    out.sourceIndex = r;
    if (x.kind() != CFKind::Stream) {
        QuadIrr alpha = tail(x, r + 1);
        QuadIrr v = (alpha * qr + QuadIrr(qrm1)).inverse();
        out.exact = v;
        out.box = enclose(v, mode == Mode::Interval ? prec_for_tol(tol) : 128);
        return out;
    }
    long avail = x.horizon() - 1 - (r + 1);  // quotients known past a_{r+1}
    if (avail < 0)
        throw Error(ErrorKind::PrecisionUnreachable,
                    "stream horizon reached before the defining tail");
    for (long terms = 1;; terms *= 2) {
        if (terms > avail) terms = avail;
        RatInterval a = terms == 0
                            ? RatInterval{Rat(x.quotient(r + 1)), Rat(x.quotient(r + 1) + 1)}
                            : tail_enclosure(x, r + 1, terms);
        RatInterval v = RatInterval(Rat(1)) /
                        (RatInterval(Rat(qr)) * a + RatInterval(Rat(qrm1)));
        if (v.width() <= tol) {
            out.box = v;
            return out;
        }
        if (terms >= avail)
            throw Error(ErrorKind::PrecisionUnreachable,
                        "stream horizon exhausted before reaching tolerance");
    }
}

}  // namespace detail

inline PsiValue psi(const PartialQuotients& x, const Int& t, Mode mode = Mode::Exact,
                    const Rat& tol = Rat(1, 1000000)) {
    if (t < 1) throw Error(ErrorKind::Parse, "psi requires t >= 1");
    auto cs = convergents_up_to_value(x, t);  // throws HorizonExhausted if needed
    if (cs.empty())
        throw Error(ErrorKind::Internal, "no convergent below t >= 1");
    const Convergent& last = cs.back();  // largest r with q_r <= t
    Int qrm1 = cs.size() >= 2 ? cs[cs.size() - 2].q : Int(0);
    return detail::psi_at_index(x, last.n, last.q, qrm1, mode, tol);
}

inline PsiValue xi(const PartialQuotients& x, long n, Mode mode = Mode::Exact,
                   const Rat& tol = Rat(1, 1000000)) {
    if (n < 0) throw Error(ErrorKind::Parse, "xi requires n >= 0");
    auto cs = convergents(x, n + 1);
    if (static_cast<long>(cs.size()) <= n)
        throw Error(ErrorKind::TailNotExact, "xi index past end of finite expansion");
    Int qrm1 = n >= 1 ? cs[n - 1].q : Int(0);
    return detail::psi_at_index(x, n, cs[n].q, qrm1, mode, tol);
}

inline PsiValue dist_to_nearest_int(const Int& q, const PartialQuotients& x,
                                    Mode mode = Mode::Exact,
                                    const Rat& tol = Rat(1, 1000000)) {
    if (q < 1) throw Error(ErrorKind::Parse, "distToNearestInt requires q >= 1");
    PsiValue out;
    if (x.kind() != CFKind::Stream) {
        QuadIrr v = evaluate(x) * q;
        Int m = (v + QuadIrr(Rat(1, 2))).floor();  // nearest integer, ties up
        QuadIrr d = v - QuadIrr(m);
        if (d.sign() < 0) d = -d;
        out.exact = d;
        out.box = enclose(d, mode == Mode::Interval ? detail::prec_for_tol(tol) : 128);
        return out;
    }
    long avail = x.horizon() - 1;
    for (long terms = 1;; terms *= 2) {
        if (terms > avail) terms = avail;
        RatInterval v = evaluate_enclosure(x, terms) * RatInterval(Rat(q));
        Int m1 = floor_rat(v.lo + Rat(1, 2)), m2 = floor_rat(v.hi + Rat(1, 2));
        RatInterval d;
        if (m1 == m2) {
            d = (v - RatInterval(Rat(m1))).abs();
        } else {
            // nearest integer switches inside the enclosure
            RatInterval d1 = (v - RatInterval(Rat(m1))).abs();
            RatInterval d2 = (v - RatInterval(Rat(m2))).abs();
            d = {std::min(std::min(d1.lo, d2.lo), Rat(0)), Rat(1, 2)};
        }
        if (d.width() <= tol) {
            out.box = d;
            return out;
        }
        if (terms >= avail)
            throw Error(ErrorKind::PrecisionUnreachable,
                        "stream horizon exhausted before reaching tolerance");
    }
}

// Rejects pairs with x + y or x - y integral (the degenerate case where both
// psi functions coincide); needs exact values.
inline void require_nonintegral_pair(const PartialQuotients& x, const PartialQuotients& y) {
    if (x.kind() == CFKind::Stream || y.kind() == CFKind::Stream)
        throw Error(ErrorKind::TailNotExact,
                    "pair precondition needs exact values; stream input given");
    Quartic X(evaluate(x)), Y(evaluate(y));
    for (const Quartic& s : {X - Y, X + Y}) {
        if (s.is_rational() && denominator(s.w()) == 1)
            throw Error(ErrorKind::SumOrDifferenceInteger,
                        "x + y or x - y is an integer; the pair is degenerate");
    }
}

namespace detail {

// #{ n in [lo, hi] : a*n + b in Z }, exact for any real quadratic/biquadratic
// slope and offset.
inline Int integer_hits(const Quartic& a, const Quartic& b, const Int& lo, const Int& hi) {
    if (hi < lo) return 0;
    Quartic ia = a - Quartic(a.w());  // irrational parts
    Quartic ib = b - Quartic(b.w());
    if (ia.sign() != 0) {
        // a*n + b rational forces n = -ib/ia, a single candidate
        Quartic cand = (-ib) / ia;
        if (!cand.is_rational() || denominator(cand.w()) != 1) return 0;
        Int n = numerator(cand.w());
        if (n < lo || n > hi) return 0;
        Quartic v = a * Quartic(n) + b;
        return (v.is_rational() && denominator(v.w()) == 1) ? 1 : 0;
    }
    if (ib.sign() != 0) return 0;
    Rat ar = a.w(), br = b.w();
    if (ar == 0) return denominator(br) == 1 ? Int(hi - lo + 1) : Int(0);
    // a = A/D, b = B/D over a common denominator: A n + B ≡ 0 (mod D)
    Int D = boost::multiprecision::lcm(denominator(ar), denominator(br));
    Int A = numerator(ar) * (D / denominator(ar));
    Int B = numerator(br) * (D / denominator(br));
    Int g = boost::multiprecision::gcd(((A % D) + D) % D, D);
    if (g == 0) g = D;
    if (B % g != 0) return 0;
    // solve (A/g) n ≡ -B/g (mod D/g) by scanning the reduced modulus' inverse
    Int M = D / g, Ar = (A / g) % M, Br = ((-B / g) % M + M) % M;
    // extended Euclid for the inverse of Ar mod M
    Int r0 = ((Ar % M) + M) % M, r1 = M, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (r0 != 1) return 0;  // not coprime after reduction: no solution
    Int n0 = ((s0 % M) * Br % M + M) % M;
    // count n ≡ n0 (mod M) in [lo, hi]
    Int first = n0 + M * ((lo - n0 + M - 1) / M);
    while (first < lo) first += M;
    while (first - M >= lo) first -= M;
    if (first > hi) return 0;
    return (hi - first) / M + 1;
}

// Sum of floor(a*n + b) for n = 0 .. N-1, exact, Euclid-like reduction:
//   S(N,a,b) = fa*N(N-1)/2 + fb*N + M*N - M + T - S(M, 1/a', (1-b')/a')
// with a' = a - fa, b' = b - fb in [0,1), M = floor(a'(N-1) + b') and
// T = #{n in [1,N-1] : a'n + b' in Z} correcting ceil vs floor at exact hits.
inline Int floor_sum(Int N, Quartic a, Quartic b) {
    if (N < 0) throw Error(ErrorKind::Internal, "floor_sum: negative count");
    Int total = 0;
    int sgn_mult = 1;
    int depth = 0;
    while (N > 0) {
        if (++depth > 4096)
            throw Error(ErrorKind::Internal, "floor_sum: reduction failed to terminate");
        Int fa = a.floor(), fb = b.floor();
        if (fa != 0) { total += sgn_mult * (fa * (N * (N - 1) / 2)); a = a - Quartic(fa); }
        if (fb != 0) { total += sgn_mult * (fb * N); b = b - Quartic(fb); }
        if (a.sign() == 0) break;  // floor of a fractional constant is 0
        Int M = (a * Quartic(Int(N - 1)) + b).floor();
        if (M <= 0) break;
        Int T = integer_hits(a, b, Int(1), Int(N - 1));
        total += sgn_mult * (M * N - M + T);
        Quartic inva = a.inverse();
        b = (Quartic(1) - b) * inva;
        a = inva;
        N = M;
        sgn_mult = -sgn_mult;
    }
    return total;
}

// The maximal psi step intervals [q_r, next) covering [1, limit], largest
// index winning the duplicate q_0 = q_1 = 1.
struct PsiBlock {
    long r;
    Int lo, hi;  // inclusive
    QuadIrr value;
};

inline std::vector<PsiBlock> psi_blocks(const PartialQuotients& x, const Int& limit) {
    auto cs = convergents_up_to_value(x, limit);
    std::vector<PsiBlock> out;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i + 1 < cs.size() && cs[i + 1].q == cs[i].q) continue;  // q_0 = q_1
        Int hi = i + 1 < cs.size() ? Int(cs[i + 1].q - 1) : limit;
        Int qrm1 = i >= 1 ? cs[i - 1].q : Int(0);
        QuadIrr v = (tail(x, cs[i].n + 1) * cs[i].q + QuadIrr(qrm1)).inverse();
        out.push_back({cs[i].n, cs[i].q, std::move(hi), std::move(v)});
    }
    return out;
}

}  // namespace detail

// All n <= nMax with psi_x(n) > ||n y||, by direct scan; for desk-size nMax.
inline std::vector<Int> dubickas_witnesses(const PartialQuotients& x,
                                           const PartialQuotients& y, const Int& nMax) {
    require_nonintegral_pair(x, y);
    QuadIrr yv = evaluate(y);
    std::vector<Int> out;
    for (auto& blk : detail::psi_blocks(x, nMax)) {
        Quartic step(blk.value);
        for (Int n = blk.lo; n <= blk.hi; ++n) {
            QuadIrr v = yv * n;
            QuadIrr d = v - QuadIrr((v + QuadIrr(Rat(1, 2))).floor());
            if (d.sign() < 0) d = -d;
            if ((step - Quartic(d)).sign() > 0) out.push_back(n);
        }
    }
    return out;
}

// #{ n <= nMax : psi_x(n) > ||n y|| } without scanning: on each psi step
// interval the count of n with ||n y|| < delta is a difference of two floor
// sums, since ||t|| < delta iff some integer lies in (t - delta, t + delta).
inline Int dubickas_witness_count(const PartialQuotients& x, const PartialQuotients& y,
                                  const Int& nMax) {
    require_nonintegral_pair(x, y);
    Quartic Y{evaluate(y)};
    Int total = 0;
    for (auto& blk : detail::psi_blocks(x, nMax)) {
        Quartic delta(blk.value);
        Int len = blk.hi - blk.lo + 1;
        Quartic base = Y * Quartic(blk.lo);
        Int plus = detail::floor_sum(len, Y, base + delta);
        Int minus = detail::floor_sum(len, Y, base - delta);
        Int ties = detail::integer_hits(Y, Quartic(delta), blk.lo, blk.hi);
        total += plus - minus - ties;
    }
    return total;
}

}  // namespace imf
