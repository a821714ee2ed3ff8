// bounds.hpp -- Johnson-type upper bounds on A_q(n,d,w) and the even-d
// asymptotic main term, in exact rational arithmetic.

#pragma once

#include "cwc/core.hpp"
#include "cwc/rational.hpp"

namespace cwc {

// Exact rational bound value plus its floor (the usable integer bound).
struct BoundValue {
    BigInt numerator;
    BigInt denominator;  // > 0, fraction in lowest terms
    BigInt floor_value;

    static BoundValue from_rational(const Rational& r) {
        return {boost::multiprecision::numerator(r), boost::multiprecision::denominator(r),
                rational_floor(r)};
    }
    Rational rational() const { return Rational(numerator, denominator); }
};

inline int johnson_t(int d, int w) {
    if (d < 1 || d > 2 * w) throw std::invalid_argument("johnson_t: need 1 <= d <= 2w");
    return (2 * w - d + 2) / 2;  // ceil((2w-d+1)/2)
}

// (q-1)^t C(n,t) / C(w,t) for odd d, (q-1)^(t-1) C(n,t) / C(w,t) for even d.
inline BoundValue johnson_bound(const CodeParams& p) {
    int t = p.t();
    int e = p.even_d() ? t - 1 : t;
    Rational v = Rational(ipow(p.q - 1, e) * binomial(p.n, t), binomial(p.w, t));
    return BoundValue::from_rational(v);
}

// The even-d main term (q-1)^(t-1) C(n,t) / C(w,t); coincides with the
// Johnson bound for even d.
inline BoundValue main_term(const CodeParams& p) {
    if (!p.even_d()) throw std::invalid_argument("main_term: d must be even");
    int t = p.t();
    Rational v = Rational(ipow(p.q - 1, t - 1) * binomial(p.n, t), binomial(p.w, t));
    return BoundValue::from_rational(v);
}

}  // namespace cwc
