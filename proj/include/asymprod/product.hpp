#ifndef ASYMPROD_PRODUCT_HPP
#define ASYMPROD_PRODUCT_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "asymprod/errors.hpp"
#include "asymprod/function_spec.hpp"
#include "asymprod/summation.hpp"

namespace asymprod {

struct ProductParams {
    double a, b, c, d, eps;
    long long n;

    // Compatibility: eps <= c*d, and if eps = c*d then c*d > 1.  The override
    // exists for parameter sets (like the e^{-x^k} exercise) where the
    // condition is known to be unnecessary.
    ProductParams(double a_, double b_, double c_, double d_, double eps_, long long n_,
                  bool compat_override = false)
        : a(a_), b(b_), c(c_), d(d_), eps(eps_), n(n_) {
        if (!(a > 0 && b > 0 && c > 0 && d > 0 && eps > 0))
            throw std::invalid_argument("ProductParams: a, b, c, d, eps must be positive");
        if (n <= 0) throw std::invalid_argument("ProductParams: n must be positive");
        if (!compat_override) {
            const double cd = c * d;
            if (eps > cd || (eps == cd && cd <= 1))
                throw std::invalid_argument(
                    "ProductParams: compatibility requires eps <= c*d (strictly, unless c*d > 1)");
        }
    }

    ProductParams with_n(long long n_) const {
        ProductParams p = *this;
        p.n = n_;
        return p;
    }
};

// Largest m with both (cm+a)d/n and (cm+b)d/n <= eps.  The additive guard
// keeps term inclusion deterministic when n*eps/(c*d) lands on a representable
// integer only up to rounding.
inline long long term_count(const ProductParams& p) {
    const double v = static_cast<double>(p.n) * p.eps / (p.c * p.d) - std::max(p.a, p.b) / p.c;
    const long long m =
        static_cast<long long>(std::floor(v + 1e-12 * std::max(1.0, std::abs(v))));
    return m < -1 ? -1 : m;
}

struct ProductValue {
    double log_value = 0;       // natural log of the (positive) product
    long long m = -1;           // term bound; -1 = empty product
    long long terms = 0;        // = m + 1
    double comp_error_bound = 0;

    double value() const { return std::exp(log_value); }
};

// K_n = prod_{j=0}^m (cj+a)/(cj+b), accumulated in log domain.
inline ProductValue eval_K(const ProductParams& p) {
    ProductValue out;
    out.m = term_count(p);
    out.terms = out.m + 1;
    CompensatedSum acc;
    for (long long j = 0; j <= out.m; ++j) {
        const double t = std::log(p.c * j + p.a) - std::log(p.c * j + p.b);
        acc.add(t);
    }
    out.log_value = acc.value();
    out.comp_error_bound = acc.error_bound();
    return out;
}

namespace detail {

inline double log_factor(const FunctionSpec& h, double xa, double xb) {
    const double ha = h.eval(xa);
    const double hb = h.eval(xb);
    if (!(ha > 0) || !(hb > 0))
        throw hypothesis_error("'" + h.name + "' is not positive at x = " +
                               std::to_string(ha > 0 ? xb : xa) +
                               " inside (0, eps]; hypothesis violated");
    return std::log(ha) - std::log(hb);
}

}  // namespace detail

// D_n = prod_{j=0}^m h((cj+a)d/n)/h((cj+b)d/n).  Arguments are formed as
// (cj+t)*(d/n) with a single division.  Each factor's log is accumulated as
// one compensated term, so swapping a and b negates the sum exactly.
inline ProductValue eval_D(const ProductParams& p, const FunctionSpec& h) {
    ProductValue out;
    out.m = term_count(p);
    out.terms = out.m + 1;
    const double scale = p.d / static_cast<double>(p.n);
    CompensatedSum acc;
    for (long long j = 0; j <= out.m; ++j) {
        const double xa = (p.c * j + p.a) * scale;
        const double xb = (p.c * j + p.b) * scale;
        acc.add(detail::log_factor(h, xa, xb));
    }
    out.log_value = acc.value();
    out.comp_error_bound = acc.error_bound();
    return out;
}

// E_n = prod_{j=0}^m H((cj+a)/n)/H((cj+b)/n), evaluated directly from the
// H-quotients rather than as D/K: D and K grow polynomially while E stays
// Theta(1), and the direct form avoids cancelling two large logs.
inline ProductValue eval_E(const ProductParams& p, const FunctionSpec& H) {
    if (p.d != 1.0)
        throw std::invalid_argument("eval_E requires d = 1 (absorb d into the function)");
    if (H.kind != FnKind::C && H.kind != FnKind::ConstantOne)
        throw kind_error("eval_E requires a C-function, got " + std::string(kind_name(H.kind)) +
                         " (" + H.name + ")");
    return eval_D(p, H);
}

}  // namespace asymprod

#endif
