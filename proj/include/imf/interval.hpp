#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "imf/integer.hpp"
#include "imf/quadirr.hpp"

namespace imf {

// A rational enclosure [lo, hi] of a real value.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat v) : lo(v), hi(v) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }

    RatInterval operator-() const { return {-hi, -lo}; }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
        return {lo, hi};
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        if (b.lo <= 0 && b.hi >= 0)
            throw Error(ErrorKind::Internal, "interval division through zero");
        return a * RatInterval{Rat(1) / b.hi, Rat(1) / b.lo};
    }

    RatInterval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return -*this;
        return {Rat(0), std::max(Rat(-lo), hi)};
    }

    // Outward rounding to dyadic endpoints with ~prec fractional bits.
    RatInterval tighten(unsigned prec) const {
        Int scale = Int(1) << prec;
        Rat l(floor_rat(lo * scale), scale);
        Rat h(ceil_rat(hi * scale), scale);
        return {l, h};
    }

    // -1, 0 (overlap) or +1 against another enclosure
    friend int disjoint_compare(const RatInterval& a, const RatInterval& b) {
        if (a.hi < b.lo) return -1;
        if (a.lo > b.hi) return 1;
        return 0;
    }
};

// sqrt of a nonnegative rational, floor/ceil at prec fractional bits
inline Rat sqrt_lower(const Rat& r, unsigned prec) {
    Int scale = Int(1) << prec;
    // floor(sqrt(r)*2^p) = isqrt(floor(num*2^(2p)/den))
    Int t = (numerator(r) << (2 * prec)) / denominator(r);
    return Rat(isqrt(t), scale);
}

inline Rat sqrt_upper(const Rat& r, unsigned prec) {
    Int scale = Int(1) << prec;
    Int t = (numerator(r) << (2 * prec)) / denominator(r);
    Int s = isqrt(t);
    if (s * s * denominator(r) != (numerator(r) << (2 * prec))) ++s;
    return Rat(s, scale);
}

inline RatInterval sqrt_enclosure(const RatInterval& r, unsigned prec) {
    if (r.lo < 0) throw Error(ErrorKind::Internal, "sqrt of negative enclosure");
    return {sqrt_lower(r.lo, prec), sqrt_upper(r.hi, prec)};
}

// k-th root of a nonnegative rational at prec fractional bits
inline RatInterval root_enclosure(const Rat& r, unsigned k, unsigned prec) {
    if (r < 0) throw Error(ErrorKind::Internal, "root of negative value");
    Int scale = Int(1) << prec;
    // floor(r^(1/k) * 2^p) = floor((r * 2^(kp))^(1/k)) adjusted exactly
    Int t = (numerator(r) << (k * prec)) / denominator(r);
    Int m = iroot(t, k);
    // m^k <= t ensures m/2^p <= r^(1/k); upper endpoint (m+1)/2^p
    return {Rat(m, scale), Rat(m + 1, scale)};
}

inline RatInterval root_enclosure(const RatInterval& r, unsigned k, unsigned prec) {
    RatInterval lo = root_enclosure(r.lo, k, prec);
    RatInterval hi = root_enclosure(r.hi, k, prec);
    return {lo.lo, hi.hi};
}

// Certified enclosure of a quadratic irrational at prec fractional bits.
inline RatInterval enclose(const QuadIrr& q, unsigned prec) {
    if (q.is_rational()) return RatInterval(q.rational_value());
    RatInterval sq = sqrt_enclosure(RatInterval(Rat(q.d())), prec + 4);
    RatInterval v = (RatInterval(Rat(q.a())) + RatInterval(Rat(q.b())) * sq) /
                    RatInterval(Rat(q.c()));
    return v.tighten(prec);
}

// Presentation-only decimal rendering with `sig` significant digits.
inline std::string format_decimal(const Rat& v, int sig) {
    if (sig < 1) sig = 1;
    if (v == 0) return "0";
    std::string sign = v < 0 ? "-" : "";
    Rat a = v < 0 ? -v : v;
    // e10: a in [0.1, 1) * 10^e10
    int e10 = 0;
    Rat t = a;
    while (t >= 1) { t /= 10; ++e10; }
    while (t < Rat(1, 10)) { t *= 10; --e10; }
    // round a * 10^(sig - e10) to an integer carrying the digits
    int k = sig - e10;
    Rat scaled = a;
    for (int i = 0; i < k; ++i) scaled *= 10;
    for (int i = 0; i < -k; ++i) scaled /= 10;
    Int digits_int = floor_rat(scaled + Rat(1, 2));
    std::string digs = digits_int.str();
    if (static_cast<int>(digs.size()) > sig) { ++e10; digs.pop_back(); }  // 0.99.. -> 1.0
    while (digs.size() > 1 && digs.back() == '0') digs.pop_back();
    std::ostringstream os;
    if (e10 > 0 && e10 <= sig + 3) {
        if (static_cast<int>(digs.size()) <= e10) digs.append(e10 - digs.size(), '0');
        os << sign << digs.substr(0, e10);
        if (static_cast<int>(digs.size()) > e10) os << "." << digs.substr(e10);
    } else if (e10 <= 0 && e10 > -4) {
        os << sign << "0." << std::string(-e10, '0') << digs;
    } else {
        os << sign << digs.substr(0, 1);
        if (digs.size() > 1) os << "." << digs.substr(1);
        os << "e" << e10 - 1;
    }
    return os.str();
}

inline std::string format_decimal(const RatInterval& v, int sig) {
    return format_decimal(v.mid(), sig);
}

inline std::string format_decimal(const QuadIrr& q, int sig) {
    unsigned prec = static_cast<unsigned>(sig * 4 + 32);
    return format_decimal(enclose(q, prec).mid(), sig);
}

}  // namespace imf
