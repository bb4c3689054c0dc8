#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <tuple>

#include "imf/errors.hpp"
#include "imf/integer.hpp"

namespace imf {

namespace detail {

// Exact sign of A + B*sqrt(d), d >= 0 squarefree, A,B rational.
inline int sign_a_plus_b_sqrt(const Rat& a, const Rat& b, const Int& d) {
    if (d == 0 || b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    int sa = sgn(a), sb = sgn(b);
    if (sa == sb) return sa;
    Rat lhs = a * a, rhs = b * b * d;
    if (lhs == rhs) return 0;  // only when d is a square; squarefree d>1 never
    return lhs > rhs ? sa : sb;
}

}  // namespace detail

// An exact element (a + b*sqrt(d))/c of a real quadratic field.
// Invariants: d squarefree >= 0, d == 0 iff the value is rational (then b == 0),
// c > 0, gcd(a, b, c) == 1.
class QuadIrr {
public:
    QuadIrr() : a_(0), b_(0), c_(1), d_(0) {}
    QuadIrr(const Int& n) : a_(n), b_(0), c_(1), d_(0) {}
    QuadIrr(long n) : a_(n), b_(0), c_(1), d_(0) {}
    QuadIrr(const Rat& r) : a_(numerator(r)), b_(0), c_(denominator(r)), d_(0) {}

    // value = (a + b*sqrt(d))/c, d arbitrary nonnegative (square part absorbed into b)
    QuadIrr(Int a, Int b, Int c, Int d) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (c_ == 0) throw Error(ErrorKind::Internal, "QuadIrr: zero denominator");
        if (d < 0) throw Error(ErrorKind::Internal, "QuadIrr: negative radicand");
        auto [core, f] = squarefree_decompose(d);
        d_ = core;
        b_ *= f;
        normalize();
    }

    // The text-syntax form (P + sqrt(D))/Q.
    static QuadIrr from_pdq(const Int& p, const Int& d, const Int& q) {
        return QuadIrr(p, 1, q, d);
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    Rat rational_value() const { return Rat(a_, c_); }
    bool is_integer() const { return d_ == 0 && c_ == 1; }

    int sign() const { return detail::sign_a_plus_b_sqrt(a_, b_, d_); }

    QuadIrr conj() const { QuadIrr r = *this; r.b_ = -r.b_; return r; }

    QuadIrr operator-() const { QuadIrr r = *this; r.a_ = -r.a_; r.b_ = -r.b_; return r; }

    friend QuadIrr operator+(const QuadIrr& u, const QuadIrr& v) {
        Int d = merge_d(u, v);
        QuadIrr r;
        r.d_ = d;
        r.a_ = u.a_ * v.c_ + v.a_ * u.c_;
        r.b_ = u.b_ * v.c_ + v.b_ * u.c_;
        r.c_ = u.c_ * v.c_;
        r.normalize();
        return r;
    }
    friend QuadIrr operator-(const QuadIrr& u, const QuadIrr& v) { return u + (-v); }

    friend QuadIrr operator*(const QuadIrr& u, const QuadIrr& v) {
        Int d = merge_d(u, v);
        QuadIrr r;
        r.d_ = d;
        r.a_ = u.a_ * v.a_ + u.b_ * v.b_ * d;
        r.b_ = u.a_ * v.b_ + u.b_ * v.a_;
        r.c_ = u.c_ * v.c_;
        r.normalize();
        return r;
    }

    QuadIrr inverse() const {
        if (sign() == 0) throw Error(ErrorKind::Internal, "QuadIrr: division by zero");
        // c/(a + b*sqrt(d)) = c*(a - b*sqrt(d)) / (a^2 - b^2 d)
        Int n = a_ * a_ - b_ * b_ * d_;
        QuadIrr r;
        r.d_ = d_;
        r.a_ = c_ * a_;
        r.b_ = -c_ * b_;
        r.c_ = n;
        r.normalize();
        return r;
    }

    friend QuadIrr operator/(const QuadIrr& u, const QuadIrr& v) { return u * v.inverse(); }

    friend QuadIrr operator+(const QuadIrr& u, const Int& n) { return u + QuadIrr(n); }
    friend QuadIrr operator-(const QuadIrr& u, const Int& n) { return u - QuadIrr(n); }
    friend QuadIrr operator*(const QuadIrr& u, const Int& n) { return u * QuadIrr(n); }

    bool operator==(const QuadIrr& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const QuadIrr& o) const { return !(*this == o); }

    // Exact order; mixed fields allowed only when one side is rational.
    friend int compare(const QuadIrr& u, const QuadIrr& v) {
        return (u - v).sign();
    }
    bool operator<(const QuadIrr& o) const { return compare(*this, o) < 0; }
    bool operator<=(const QuadIrr& o) const { return compare(*this, o) <= 0; }
    bool operator>(const QuadIrr& o) const { return compare(*this, o) > 0; }
    bool operator>=(const QuadIrr& o) const { return compare(*this, o) >= 0; }

    Int floor() const {
        if (d_ == 0) return floor_div(a_, c_);
        Int t = isqrt(b_ * b_ * d_);          // t <= |b| sqrt(d) < t+1
        Int num_lo = a_ + (b_ > 0 ? t : -t - 1);
        Int m = floor_div(num_lo, c_);
        while (cmp_int(m + 1) >= 0) ++m;      // value >= m+1
        while (cmp_int(m) < 0) --m;           // value < m
        return m;
    }

    // sign(value - n)
    int cmp_int(const Int& n) const {
        return detail::sign_a_plus_b_sqrt(Int(a_ - n * c_), b_, d_);
    }

    // sign(value - r)
    int cmp_rat(const Rat& r) const {
        return detail::sign_a_plus_b_sqrt(Int(a_ * denominator(r) - numerator(r) * c_),
                                          Int(b_ * denominator(r)), d_);
    }

    // Strict ordering usable as a map key (not the numeric order).
    friend bool key_less(const QuadIrr& u, const QuadIrr& v) {
        return std::tie(u.a_, u.b_, u.c_, u.d_) < std::tie(v.a_, v.b_, v.c_, v.d_);
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadIrr& q) {
        os << "(" << q.a_;
        if (q.b_ != 0) os << (q.b_ > 0 ? "+" : "-") << "sqrt(" << q.b_ * q.b_ * q.d_ << ")";
        os << ")/" << q.c_;
        return os;
    }

private:
    static Int merge_d(const QuadIrr& u, const QuadIrr& v) {
        if (u.d_ == 0) return v.d_;
        if (v.d_ == 0) return u.d_;
        if (u.d_ != v.d_)
            throw Error(ErrorKind::Internal, "QuadIrr: mixed quadratic fields");
        return u.d_;
    }

    void normalize() {
        if (d_ == 1) { a_ += b_; b_ = 0; d_ = 0; }  // sqrt of a square is rational
        if (d_ == 0) b_ = 0;
        if (b_ == 0) d_ = 0;
        if (c_ < 0) { a_ = -a_; b_ = -b_; c_ = -c_; }
        Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(a_), abs(b_)), c_);
        if (g > 1) { a_ /= g; b_ /= g; c_ /= g; }
    }

    Int a_, b_, c_, d_;
};

}  // namespace imf
