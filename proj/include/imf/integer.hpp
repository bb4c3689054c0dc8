#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace imf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int isqrt(const Int& n) {
    // floor(sqrt(n)), n >= 0
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

// floor(a / b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

inline Int ceil_rat(const Rat& r) {
    return -floor_rat(-r);
}

inline int sgn(const Int& n) { return n < 0 ? -1 : (n > 0 ? 1 : 0); }
inline int sgn(const Rat& r) { return sgn(numerator(r)); }

// floor of the k-th root, n >= 0, k >= 1
inline Int iroot(const Int& n, unsigned k) {
    if (n <= 1 || k == 1) return n;
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    Int hi = Int(1) << (bits / k + 1);
    Int lo = 0;
    while (lo < hi - 1) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return a * b % m; }

inline bool miller_rabin(const Int& n, const Int& a) {
    if (n % a == 0) return n == a;
    Int d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    Int x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(n, a)) return false;
    return true;
}

inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    Int x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2; y = 2; d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
        ++c;
    }
}

inline void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        for (auto& f : out)
            if (f.first == n) { ++f.second; return; }
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

inline std::vector<std::pair<Int, unsigned>> factor(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    detail::factor_into(n, out);
    return out;
}

// d = core * f^2 with core squarefree.  Returns {core, f}.
inline std::pair<Int, Int> squarefree_decompose(const Int& d) {
    if (d == 0) return {0, 1};
    Int core = 1, f = 1;
    for (auto& [p, e] : factor(d)) {
        if (e % 2) core *= p;
        for (unsigned i = 0; i < e / 2; ++i) f *= p;
    }
    return {core, f};
}

}  // namespace imf
