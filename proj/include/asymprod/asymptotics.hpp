#ifndef ASYMPROD_ASYMPTOTICS_HPP
#define ASYMPROD_ASYMPTOTICS_HPP

#include <cmath>
#include <stdexcept>

namespace asymprod {

namespace detail {

// Lanczos rational approximation, g = 607/128, 15 coefficients (Godfrey's
// set).  Relative error of the sum is a few ulp across the positive axis.
inline double lanczos_sum(double x) {
    static const double coeff[15] = {
        0.99999999999999709182,     57.156235665862923517,
        -59.597960355475491248,     14.136097974741747174,
        -0.49191381609762019978,    0.33994649984811888699e-4,
        0.46523628927048575665e-4,  -0.98374475304879564677e-4,
        0.15808870322491248884e-3,  -0.21026444172410488319e-3,
        0.21743961811521264320e-3,  -0.16431810653676389022e-3,
        0.84418223983852743293e-4,  -0.26190838401581408670e-4,
        0.36899182659531622704e-5,
    };
    double sum = coeff[0];
    for (int i = 1; i < 15; ++i) sum += coeff[i] / (x - 1 + i);
    return sum;
}

}  // namespace detail

// ln Gamma(x) for x > 0.  Reflection handles (0, 0.5).
inline double log_gamma(double x) {
    if (!(x > 0)) throw std::domain_error("log_gamma: argument must be positive");
    static const double g = 607.0 / 128.0;
    static const double half_log_2pi = 0.91893853320467274178;
    static const double pi = 3.14159265358979323846;
    if (x < 0.5)
        return std::log(pi / std::sin(pi * x)) - log_gamma(1 - x);
    const double t = x + g - 0.5;
    return (x - 0.5) * std::log(t) - t + half_log_2pi + std::log(detail::lanczos_sum(x));
}

// log of K's closed Gamma form: Gamma(b/c)/Gamma(a/c) *
// Gamma(m+1+a/c)/Gamma(m+1+b/c).
inline double log_k_gamma_identity(double a, double b, double c, long long m) {
    if (m < 0) throw std::domain_error("k_gamma_identity: m must be >= 0");
    return log_gamma(b / c) - log_gamma(a / c) + log_gamma(m + 1 + a / c) -
           log_gamma(m + 1 + b / c);
}

inline double k_gamma_identity(double a, double b, double c, long long m) {
    return std::exp(log_k_gamma_identity(a, b, c, m));
}

struct Asymptote {
    double constant;  // n-independent prefactor
    double exponent;  // (a-b)/c
};

inline double growth_exponent(double a, double b, double c) {
    if (!(c > 0)) throw std::domain_error("growth_exponent: c must be positive");
    return (a - b) / c;
}

// K_n ~ constant * n^{(a-b)/c}.  Assembled in log domain so extreme
// parameter ratios cannot overflow before the final exponential.
inline Asymptote k_asymptote(double a, double b, double c, double eps) {
    if (!(a > 0 && b > 0 && c > 0 && eps > 0))
        throw std::domain_error("k_asymptote: parameters must be positive");
    const double e = growth_exponent(a, b, c);
    const double log_const = log_gamma(b / c) - log_gamma(a / c) + e * std::log(eps / c);
    return Asymptote{std::exp(log_const), e};
}

// Upper bound for the Theorem constant C, valid for a > b.
inline double c_upper_bound(double a, double b, double c, double eps) {
    if (!(a > b)) throw std::domain_error("c_upper_bound requires a > b");
    return k_asymptote(a, b, c, eps).constant;
}

// lim_n D_n(a,b,c,d,((k-1)/k)^{1/k}; e^{-x^k}) = exp(-((k-1)/k)*(a-b)/c).
inline double exercise_limit(double a, double b, double c, int k) {
    if (k < 2) throw std::domain_error("exercise_limit requires k >= 2");
    return std::exp(-((k - 1.0) / k) * (a - b) / c);
}

}  // namespace asymprod

#endif
