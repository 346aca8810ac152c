#ifndef ASYMPROD_EXACT_RATIONAL_HPP
#define ASYMPROD_EXACT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "asymprod/errors.hpp"

namespace asymprod {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Natural log of a positive big integer; large values are reduced by a power
// of two so the mantissa fits in a double.
inline double log_cpp_int(const cpp_int& v) {
    if (v <= 0) throw std::domain_error("log_cpp_int: nonpositive argument");
    const unsigned bits = msb(v);
    if (bits < 900) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 900;
    const cpp_int reduced = v >> shift;
    return std::log(reduced.convert_to<double>()) + shift * 0.69314718055994530942;
}

inline double log_rational(const cpp_rational& q) {
    return log_cpp_int(numerator(q)) - log_cpp_int(denominator(q));
}

// Exact prod_{j=0}^m (cj+a)/(cj+b) as a reduced fraction.  The common
// denominator of a, b, c cancels between numerator and denominator, so the
// running product stays an integer-over-integer form until the final
// reduction.
inline cpp_rational eval_K_exact(const cpp_rational& a, const cpp_rational& b,
                                 const cpp_rational& c, long long m,
                                 long long cap = 100000) {
    if (m > cap)
        throw resource_error("eval_K_exact: m = " + std::to_string(m) +
                             " exceeds cap " + std::to_string(cap));
    if (m < 0) return cpp_rational(1);

    // Rewrite over the common denominator L: cj+a = (pc*j + pa)/L.
    const cpp_int L = denominator(a) * denominator(b) * denominator(c);
    const cpp_int pa = numerator(a) * (L / denominator(a));
    const cpp_int pb = numerator(b) * (L / denominator(b));
    const cpp_int pc = numerator(c) * (L / denominator(c));

    cpp_int num = 1, den = 1;
    for (long long j = 0; j <= m; ++j) {
        num *= pc * j + pa;
        den *= pc * j + pb;
    }
    return cpp_rational(num, den);
}

}  // namespace asymprod

#endif
