#pragma once

#include <ostream>

#include "imf/interval.hpp"
#include "imf/quadirr.hpp"

namespace imf {

// Exact element of the compositum Q(sqrt(r1), sqrt(r2)) of two real quadratic
// fields: value = w + x*sqrt(r1) + y*sqrt(r2) + z*sqrt(r1*r2).
//
// r1, r2 squarefree with 1 < r1 < r2, or 0 when the corresponding basis slots
// are unused.  All arithmetic and sign tests are exact; comparisons against
// sqrt-of-field-element thresholds reduce to squaring (see cmp_with_sqrt).
class Quartic {
public:
    Quartic() : r1_(0), r2_(0), w_(0), x_(0), y_(0), z_(0) {}
    Quartic(const Rat& r) : r1_(0), r2_(0), w_(r), x_(0), y_(0), z_(0) {}
    Quartic(const Int& n) : Quartic(Rat(n)) {}
    Quartic(long n) : Quartic(Rat(n)) {}

    Quartic(const QuadIrr& q) : r1_(0), r2_(0), x_(0), y_(0), z_(0) {
        w_ = Rat(q.a(), q.c());
        if (!q.is_rational()) {
            r1_ = q.d();
            x_ = Rat(q.b(), q.c());
        }
    }

    const Int& r1() const { return r1_; }
    const Int& r2() const { return r2_; }
    const Rat& w() const { return w_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    const Rat& z() const { return z_; }

    bool is_rational() const { return x_ == 0 && y_ == 0 && z_ == 0; }

    Quartic operator-() const {
        Quartic r = *this;
        r.w_ = -r.w_; r.x_ = -r.x_; r.y_ = -r.y_; r.z_ = -r.z_;
        return r;
    }

    friend Quartic operator+(Quartic u, const Quartic& v) {
        align(u, v);
        Quartic o = u;
        Quartic vv = promote(v, u.r1_, u.r2_);
        o.w_ += vv.w_; o.x_ += vv.x_; o.y_ += vv.y_; o.z_ += vv.z_;
        o.prune();
        return o;
    }
    friend Quartic operator-(const Quartic& u, const Quartic& v) { return u + (-v); }

    friend Quartic operator*(Quartic u, const Quartic& v) {
        align(u, v);
        Quartic a = u, b = promote(v, u.r1_, u.r2_);
        const Int& d1 = u.r1_ == 0 ? Int(1) : u.r1_;
        const Int& d2 = u.r2_ == 0 ? Int(1) : u.r2_;
        Quartic o;
        o.r1_ = u.r1_; o.r2_ = u.r2_;
        // basis products: s1*s1=d1, s2*s2=d2, s1*s2=s12, s12*s12=d1*d2,
        // s1*s12=d1*s2, s2*s12=d2*s1
        o.w_ = a.w_ * b.w_ + a.x_ * b.x_ * d1 + a.y_ * b.y_ * d2 + a.z_ * b.z_ * d1 * d2;
        o.x_ = a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ * d2 + a.z_ * b.y_ * d2;
        o.y_ = a.w_ * b.y_ + a.y_ * b.w_ + a.x_ * b.z_ * d1 + a.z_ * b.x_ * d1;
        o.z_ = a.w_ * b.z_ + a.z_ * b.w_ + a.x_ * b.y_ + a.y_ * b.x_;
        o.prune();
        return o;
    }

    Quartic inverse() const {
        // conjugate over sqrt(r2): (P - Q*s2) / (P^2 - Q^2 r2), P,Q in Q(sqrt(r1))
        if (sign() == 0) throw Error(ErrorKind::Internal, "Quartic: division by zero");
        if (y_ == 0 && z_ == 0) {
            // quadratic (or rational) element: (w - x*s1) / (w^2 - x^2 r1)
            Rat den = w_ * w_ - x_ * x_ * (r1_ == 0 ? Int(0) : r1_);
            Quartic o = *this;
            o.x_ = -o.x_;
            o.w_ /= den; o.x_ /= den;
            o.prune();
            return o;
        }
        Quartic conj2 = *this;
        conj2.y_ = -conj2.y_; conj2.z_ = -conj2.z_;
        Quartic den = *this * conj2;       // lives in Q(sqrt(r1))
        if (den.y_ != 0 || den.z_ != 0)
            throw Error(ErrorKind::Internal, "Quartic: inverse reduction failed");
        return conj2 * den.inverse();
    }

    friend Quartic operator/(const Quartic& u, const Quartic& v) { return u * v.inverse(); }

    Quartic pow(unsigned k) const {
        Quartic r(Rat(1)), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    // Exact sign via nested quadratic sign tests.
    int sign() const {
        // value = P + Q*sqrt(r2) with P = w + x*sqrt(r1), Q = y + z*sqrt(r1)
        int sq = detail::sign_a_plus_b_sqrt(y_, z_, r1_ == 0 ? Int(0) : r1_);
        int sp = detail::sign_a_plus_b_sqrt(w_, x_, r1_ == 0 ? Int(0) : r1_);
        if (sq == 0) return sp;
        if (sp == 0) return sq;
        if (sp == sq) return sp;
        // compare P^2 vs Q^2 * r2 inside Q(sqrt(r1))
        Rat pa = w_ * w_ + x_ * x_ * r1_, pb = 2 * w_ * x_;
        Rat qa = (y_ * y_ + z_ * z_ * r1_) * r2_, qb = 2 * y_ * z_ * r2_;
        int t = detail::sign_a_plus_b_sqrt(Rat(pa - qa), Rat(pb - qb), r1_);
        if (t == 0) return 0;
        return t > 0 ? sp : sq;
    }

    bool operator==(const Quartic& o) const { return (*this - o).sign() == 0; }
    bool operator<(const Quartic& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Quartic& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Quartic& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Quartic& o) const { return (*this - o).sign() >= 0; }

    Quartic abs() const { return sign() < 0 ? -*this : *this; }

    RatInterval enclose(unsigned prec) const {
        RatInterval v{w_, w_};
        if (x_ != 0) v = v + RatInterval{x_, x_} * sqrt_enclosure(RatInterval(Rat(r1_)), prec + 4);
        if (y_ != 0) v = v + RatInterval{y_, y_} * sqrt_enclosure(RatInterval(Rat(r2_)), prec + 4);
        if (z_ != 0) v = v + RatInterval{z_, z_} * sqrt_enclosure(RatInterval(Rat(r1_ * r2_)), prec + 4);
        return v.tighten(prec);
    }

    Int floor() const {
        Int m = floor_rat(enclose(96).lo);
        while ((*this - Quartic(Rat(m + 1))).sign() >= 0) ++m;
        while ((*this - Quartic(Rat(m))).sign() < 0) --m;
        return m;
    }

    friend std::ostream& operator<<(std::ostream& os, const Quartic& q) {
        os << q.w_;
        if (q.x_ != 0) os << " + " << q.x_ << "*sqrt(" << q.r1_ << ")";
        if (q.y_ != 0) os << " + " << q.y_ << "*sqrt(" << q.r2_ << ")";
        if (q.z_ != 0) os << " + " << q.z_ << "*sqrt(" << q.r1_ * q.r2_ << ")";
        return os;
    }

private:
    // Move coordinates so both operands share the same (r1, r2) context.
    static Quartic promote(const Quartic& v, const Int& r1, const Int& r2) {
        Quartic o;
        o.r1_ = r1; o.r2_ = r2;
        o.w_ = v.w_;
        auto place = [&](const Int& rad, const Rat& coef) {
            if (coef == 0) return;
            if (rad == r1) o.x_ += coef;
            else if (rad == r2) o.y_ += coef;
            else if (r1 != 0 && r2 != 0 && rad == r1 * r2) o.z_ += coef;
            else throw Error(ErrorKind::Internal, "Quartic: more than two quadratic fields");
        };
        place(v.r1_, v.x_);
        place(v.r2_, v.y_);
        if (v.z_ != 0) {
            if (v.r1_ == r1 && v.r2_ == r2) o.z_ = v.z_;
            else throw Error(ErrorKind::Internal, "Quartic: incompatible compositum");
        }
        return o;
    }

    // Grow u's context so it can hold both operands, then callers promote v.
    static void align(Quartic& u, const Quartic& v) {
        auto add_field = [&](const Int& rad) {
            if (rad == 0 || rad == u.r1_ || rad == u.r2_) return;
            if (u.r1_ != 0 && u.r2_ != 0 && rad == u.r1_ * u.r2_) return;  // lands in z
            if (u.r1_ == 0) u.r1_ = rad;
            else if (u.r2_ == 0) u.r2_ = rad;
            else throw Error(ErrorKind::Internal, "Quartic: more than two quadratic fields");
            if (u.r2_ != 0 && u.r1_ > u.r2_) {
                std::swap(u.r1_, u.r2_);
                std::swap(u.x_, u.y_);
            }
        };
        add_field(v.r1_);
        add_field(v.r2_);
        if (v.z_ != 0 && !(v.r1_ == u.r1_ && v.r2_ == u.r2_))
            throw Error(ErrorKind::Internal, "Quartic: incompatible compositum");
    }

    void prune() {
        if (x_ == 0 && z_ == 0) r1_ = 0;
        if (y_ == 0 && z_ == 0) r2_ = 0;
        if (r1_ == 0 && r2_ != 0) { std::swap(r1_, r2_); std::swap(x_, y_); }
    }

    Int r1_, r2_;
    Rat w_, x_, y_, z_;
};

// sign(X - f*sqrt(d)) for rational f and nonsquare d > 1, fully exact.
inline int cmp_with_sqrt(const Quartic& X, const Rat& f, const Int& d) {
    if (f == 0) return X.sign();
    int sx = X.sign();
    int sf = sgn(f);
    if (sx != sf) {
        if (sx == 0) return -sf;
        return sx > 0 ? 1 : -1;
    }
    Quartic t = X * X - Quartic(Rat(f * f * d));
    int s = t.sign();
    return sx > 0 ? s : -s;
}

}  // namespace imf
