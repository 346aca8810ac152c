#ifndef ASYMPROD_CATALOG_HPP
#define ASYMPROD_CATALOG_HPP

#include <cmath>
#include <vector>

#include "asymprod/function_spec.hpp"

namespace asymprod {

// exp(-x^k), k >= 2.  Closed-form epsilon ((k-1)/k)^(1/k) is the inflection
// of the second derivative sign.
inline FunctionSpec make_exp_neg_xk(int k) {
    FunctionSpec f;
    f.name = "exp_neg_x" + std::to_string(k);
    f.kind = FnKind::C;
    f.eval = [k](double x) { return std::exp(-std::pow(x, k)); };
    f.d1 = [k](double x) {
        return -k * std::pow(x, k - 1) * std::exp(-std::pow(x, k));
    };
    f.d2 = [k](double x) {
        const double e = std::exp(-std::pow(x, k));
        const double t1 = k == 2 ? 2.0 : k * (k - 1) * std::pow(x, k - 2);
        return (-t1 + k * k * std::pow(x, 2 * k - 2)) * e;
    };
    f.taylor = TaylorSignature{1.0, 1.0, k};
    f.closed_form_epsilon = std::pow((k - 1.0) / k, 1.0 / k);
    f.domain_radius = 10.0;
    return f;
}

inline std::vector<FunctionSpec> make_catalog() {
    std::vector<FunctionSpec> cat;
    const double pi = 3.14159265358979323846;
    const double inv_sqrt_pi = 0.56418958354775628695;  // 1/sqrt(pi)

    {
        FunctionSpec f;
        f.name = "sin";
        f.kind = FnKind::S;
        f.eval = [](double x) { return std::sin(x); };
        f.d1 = [](double x) { return std::cos(x); };
        f.d2 = [](double x) { return -std::sin(x); };
        f.taylor = TaylorSignature{1.0, 1.0 / 6.0, 3};
        f.closed_form_epsilon = pi / 2;  // for sin(x)/x
        f.domain_radius = pi;            // sin > 0 on (0, pi)
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "arctan";
        f.kind = FnKind::S;
        f.eval = [](double x) { return std::atan(x); };
        f.d1 = [](double x) { return 1 / (1 + x * x); };
        f.d2 = [](double x) { const double q = 1 + x * x; return -2 * x / (q * q); };
        f.taylor = TaylorSignature{1.0, 1.0 / 3.0, 3};
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "tanh";
        f.kind = FnKind::S;
        f.eval = [](double x) { return std::tanh(x); };
        f.d1 = [](double x) { const double t = std::tanh(x); return 1 - t * t; };
        f.d2 = [](double x) { const double t = std::tanh(x); return -2 * t * (1 - t * t); };
        f.taylor = TaylorSignature{1.0, 1.0 / 3.0, 3};
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "asinh";
        f.kind = FnKind::S;
        f.eval = [](double x) { return std::asinh(x); };
        f.d1 = [](double x) { return 1 / std::sqrt(1 + x * x); };
        f.d2 = [](double x) { return -x * std::pow(1 + x * x, -1.5); };
        f.taylor = TaylorSignature{1.0, 1.0 / 6.0, 3};
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "erf";
        f.kind = FnKind::S;
        f.eval = [](double x) { return std::erf(x); };
        f.d1 = [inv_sqrt_pi](double x) { return 2 * inv_sqrt_pi * std::exp(-x * x); };
        f.d2 = [inv_sqrt_pi](double x) { return -4 * inv_sqrt_pi * x * std::exp(-x * x); };
        f.taylor = TaylorSignature{2 * inv_sqrt_pi, 1.0 / 3.0, 3};
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "identity";
        f.kind = FnKind::Identity;
        f.eval = [](double x) { return x; };
        f.d1 = [](double) { return 1.0; };
        f.d2 = [](double) { return 0.0; };
        f.domain_radius = 1e6;
        cat.push_back(f);
    }

    {
        FunctionSpec f;
        f.name = "cos";
        f.kind = FnKind::C;
        f.eval = [](double x) { return std::cos(x); };
        f.d1 = [](double x) { return -std::sin(x); };
        f.d2 = [](double x) { return -std::cos(x); };
        f.taylor = TaylorSignature{1.0, 0.5, 2};
        f.closed_form_epsilon = pi / 2;
        f.domain_radius = pi / 2;  // cos > 0 up to pi/2
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "sech";
        f.kind = FnKind::C;
        f.eval = [](double x) { return 1 / std::cosh(x); };
        f.d1 = [](double x) { const double s = 1 / std::cosh(x); return -s * std::tanh(x); };
        f.d2 = [](double x) {
            const double s = 1 / std::cosh(x), t = std::tanh(x);
            return s * (t * t - s * s);
        };
        f.taylor = TaylorSignature{1.0, 0.5, 2};
        f.closed_form_epsilon = std::asinh(1.0);  // tanh = sech crossing
        cat.push_back(f);
    }
    cat.push_back(make_exp_neg_xk(2));
    cat.push_back(make_exp_neg_xk(3));
    {
        FunctionSpec f;
        f.name = "inv_one_plus_x2";
        f.kind = FnKind::C;
        f.eval = [](double x) { return 1 / (1 + x * x); };
        f.d1 = [](double x) { const double q = 1 + x * x; return -2 * x / (q * q); };
        f.d2 = [](double x) { const double q = 1 + x * x; return (6 * x * x - 2) / (q * q * q); };
        f.taylor = TaylorSignature{1.0, 1.0, 2};
        f.closed_form_epsilon = 1 / std::sqrt(3.0);
        cat.push_back(f);
    }
    {
        FunctionSpec f;
        f.name = "one";
        f.kind = FnKind::ConstantOne;
        f.eval = [](double) { return 1.0; };
        f.d1 = [](double) { return 0.0; };
        f.d2 = [](double) { return 0.0; };
        f.domain_radius = 1e6;
        cat.push_back(f);
    }
    {
        // acot(0+) = pi/2 but acot'(0) = -1, so the C conditions fail;
        // kept for inspection only.
        FunctionSpec f;
        f.name = "acot";
        f.kind = FnKind::C;
        f.paper_listed_only = true;
        f.eval = [pi](double x) { return x == 0 ? pi / 2 : std::atan(1 / x); };
        f.d1 = [](double x) { return -1 / (1 + x * x); };
        f.d2 = [](double x) { const double q = 1 + x * x; return 2 * x / (q * q); };
        cat.push_back(f);
    }
    return cat;
}

inline const std::vector<FunctionSpec>& catalog() {
    static const std::vector<FunctionSpec> cat = make_catalog();
    return cat;
}

inline const FunctionSpec* find_function(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace asymprod

#endif
