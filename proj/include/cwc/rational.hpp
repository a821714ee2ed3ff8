// rational.hpp -- exact arbitrary-precision integers/rationals and binomials.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace cwc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r is always an integer here
    }
    return r;
}

inline BigInt ipow(BigInt base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// (q-1)^e as a rational, allowing negative e.
inline Rational qpow(int q, int e) {
    BigInt p = ipow(q - 1, e >= 0 ? e : -e);
    return e >= 0 ? Rational(p) : Rational(1, p);
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
    // den > 0 in all uses here
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline BigInt rational_floor(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

// Render a nonnegative rational with `digits` fractional digits, round-half-even.
inline std::string format_fixed(const Rational& r, int digits) {
    BigInt scale = ipow(10, digits);
    BigInt num = numerator(r) * scale;
    BigInt den = denominator(r);
    BigInt q = num / den, rem = num % den;
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && (q % 2) != 0)) ++q;
    std::string s = q.str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    s.insert(s.size() - static_cast<size_t>(digits), ".");
    return s;
}

}  // namespace cwc
