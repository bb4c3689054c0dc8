#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "imf/cf.hpp"
#include "imf/errors.hpp"
#include "imf/quadirr.hpp"

namespace imf {

// Text syntax for numbers:
//   quad:(P,D,Q)                      value (P + sqrt(D))/Q
//   cf:[a0; a1, a2, (p1, p2)]         parentheses delimit the period
//   cf:[a0; a1, a2, ...]              stream-backed prefix (horizon = known part)
// Non-canonical forms are rejected with a positioned message.

namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' (" + what + ")");
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool eat_literal(const std::string& lit) {
        skip_ws();
        if (s_.compare(pos_, lit.size(), lit) == 0) { pos_ += lit.size(); return true; }
        return false;
    }

    Int integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == dstart) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    // raw digit run, preserving leading zeros
    std::string digits() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at column " << pos_ + 1 << ": " << msg << " in '" << s_ << "'";
        throw Error(ErrorKind::Parse, os.str());
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline QuadIrr parse_quad(const std::string& text) {
    detail::Cursor c(text);
    if (!c.eat_literal("quad:")) c.fail("expected 'quad:' prefix");
    c.expect('(', "quad:(P,D,Q)");
    Int p = c.integer();
    c.expect(',', "quad:(P,D,Q)");
    Int d = c.integer();
    c.expect(',', "quad:(P,D,Q)");
    Int q = c.integer();
    c.expect(')', "quad:(P,D,Q)");
    if (!c.done()) c.fail("trailing characters after quad:(P,D,Q)");
    if (q == 0) c.fail("Q must be nonzero");
    if (d < 0) c.fail("D must be nonnegative");
    if (d > 0 && is_perfect_square(d))
        c.fail("D is a perfect square; rationals use the canonical form D = 0");
    return QuadIrr::from_pdq(p, d, q);
}

inline PartialQuotients parse_cf(const std::string& text) {
    detail::Cursor c(text);
    if (!c.eat_literal("cf:")) c.fail("expected 'cf:' prefix");
    c.expect('[', "cf:[...]");
    Int a0 = c.integer();
    std::vector<Int> pre, period;
    bool is_stream = false;
    if (c.eat(';')) {
        bool in_period = false, closed = false;
        while (true) {
            if (!in_period && c.eat_literal("...")) {
                is_stream = true;
                break;
            }
            if (!in_period && c.eat('(')) {
                in_period = true;
                if (c.peek(')')) c.fail("period must be nonempty");
            }
            Int a = c.integer();
            if (a < 1) c.fail("partial quotients past a0 must be >= 1");
            (in_period ? period : pre).push_back(a);
            if (in_period && c.eat(')')) { closed = true; break; }
            if (!c.eat(',')) {
                if (in_period) c.fail("expected ',' or ')' inside period");
                break;
            }
        }
        if (in_period && !closed) c.fail("unterminated period");
        if (closed && !c.peek(']')) c.fail("period must be the last element");
    }
    c.expect(']', "cf:[...]");
    if (!c.done()) c.fail("trailing characters after cf:[...]");
    if (is_stream) return PartialQuotients::stream(a0, std::move(pre));
    if (!period.empty()) return PartialQuotients::periodic(a0, std::move(pre), std::move(period));
    if (!pre.empty() && pre.back() == 1)
        c.fail("finite expansion must end with a quotient >= 2 (canonical form)");
    return PartialQuotients::rational(a0, std::move(pre));
}

// A number given in either syntax, usable as expansion or as exact value.
struct NumberSpec {
    std::string text;
    PartialQuotients cf = PartialQuotients::rational(0, {});
    std::optional<QuadIrr> value;  // absent for stream-backed input

    static NumberSpec parse(const std::string& text) {
        NumberSpec n;
        n.text = text;
        if (text.rfind("quad:", 0) == 0) {
            QuadIrr q = parse_quad(text);
            n.value = q;
            n.cf = expand(q);
        } else if (text.rfind("cf:", 0) == 0) {
            n.cf = parse_cf(text);
            if (n.cf.kind() != CFKind::Stream) n.value = evaluate(n.cf);
        } else {
            throw Error(ErrorKind::Parse,
                        "number must start with 'quad:' or 'cf:': '" + text + "'");
        }
        return n;
    }

    const QuadIrr& exact() const {
        if (!value)
            throw Error(ErrorKind::TailNotExact,
                        "stream-backed number has no exact value: " + text);
        return *value;
    }
};

// "3/7", "0.25" or "12" as an exact rational.
inline Rat parse_rat(const std::string& text) {
    detail::Cursor c(text);
    Int num = c.integer();
    if (c.eat('/')) {
        Int den = c.integer();
        if (den == 0) c.fail("zero denominator");
        if (!c.done()) c.fail("trailing characters in rational");
        return Rat(num, den);
    }
    if (c.eat('.')) {
        bool neg = text.find('-') != std::string::npos && num <= 0;
        Rat v(neg ? -num : num);
        std::string digs = c.digits();
        Int den = 1;
        for (size_t i = 0; i < digs.size(); ++i) den *= 10;
        v += Rat(Int(digs), den);
        if (!c.done()) c.fail("trailing characters in decimal");
        return neg ? -v : v;
    }
    if (!c.done()) c.fail("trailing characters in number");
    return Rat(num);
}

inline std::string render_cf(const PartialQuotients& x) {
    std::ostringstream os;
    os << "cf:" << x;
    return os.str();
}

inline std::string render_quad(const QuadIrr& q) {
    // (a + b*sqrt(d))/c as quad:(P,D,Q); a negative b flips the signs of P and
    // Q so that the sqrt coefficient stays +1.
    std::ostringstream os;
    Int p = q.a(), big_d = q.b() * q.b() * q.d(), qq = q.c();
    if (q.b() < 0) { p = -p; qq = -qq; }
    os << "quad:(" << p << "," << big_d << "," << qq << ")";
    return os.str();
}

}  // namespace imf
