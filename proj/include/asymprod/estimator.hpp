#ifndef ASYMPROD_ESTIMATOR_HPP
#define ASYMPROD_ESTIMATOR_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include "asymprod/asymptotics.hpp"
#include "asymprod/errors.hpp"
#include "asymprod/function_spec.hpp"
#include "asymprod/product.hpp"

namespace asymprod {

struct Schedule {
    std::vector<long long> n_values;  // strictly increasing

    static Schedule geometric(long long n0, double ratio, int count) {
        if (n0 <= 0 || ratio <= 1 || count < 1)
            throw std::invalid_argument("Schedule::geometric: need n0 > 0, ratio > 1, count >= 1");
        Schedule s;
        double v = static_cast<double>(n0);
        long long prev = 0;
        for (int i = 0; i < count; ++i, v *= ratio) {
            long long n = std::llround(v);
            if (n <= prev) n = prev + 1;
            s.n_values.push_back(n);
            prev = n;
        }
        return s;
    }
};

enum class DecayModel { inv_log, inv_n, power };

inline const char* model_name(DecayModel m) {
    switch (m) {
        case DecayModel::inv_log: return "inv_log";
        case DecayModel::inv_n: return "inv_n";
        case DecayModel::power: return "power";
    }
    return "?";
}

struct LimitEstimate {
    double e_infinity = 0;   // extrapolated lim E_n
    double c_constant = 0;   // e_infinity * K-asymptote constant
    DecayModel model = DecayModel::inv_log;
    std::vector<double> fit_params;  // [limit, beta] (+ exponent p for power)
    double residual_norm = 0;
    bool range_warning = false;  // limit outside (0,1) when a > b
};

using Series = std::vector<std::pair<long long, double>>;

namespace detail {

template <typename F>
inline void parallel_for_index(std::size_t count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const int nt = std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

struct LinFit {
    double limit, beta, residual_norm;
};

// Least squares of y ~ L + beta * phi over the given abscissas.
template <typename Phi>
inline LinFit fit_linear(const Series& series, Phi&& phi) {
    const std::size_t n = series.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [nn, y] : series) {
        const double x = phi(nn);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 1e-300 * std::max(1.0, n * sxx)))
        throw fit_error("degenerate design matrix in extrapolation fit");
    const double beta = (n * sxy - sx * sy) / den;
    const double limit = (sy - beta * sx) / n;
    double ss = 0;
    for (const auto& [nn, y] : series) {
        const double r = limit + beta * phi(nn) - y;
        ss += r * r;
    }
    return LinFit{limit, beta, std::sqrt(ss)};
}

inline LinFit fit_model(const Series& series, DecayModel model, double p) {
    switch (model) {
        case DecayModel::inv_log:
            return fit_linear(series, [](long long n) { return 1.0 / std::log((double)n); });
        case DecayModel::inv_n:
            return fit_linear(series, [](long long n) { return 1.0 / (double)n; });
        case DecayModel::power:
            return fit_linear(series, [p](long long n) { return std::pow((double)n, -p); });
    }
    throw fit_error("unknown model");
}

// Coarse scan plus golden-section refinement of the power-model exponent.
inline std::pair<double, LinFit> fit_power_best(const Series& series) {
    double best_p = 0.5;
    LinFit best = fit_model(series, DecayModel::power, best_p);
    for (double p = 0.02; p <= 3.0; p += 0.02) {
        LinFit f = fit_model(series, DecayModel::power, p);
        if (f.residual_norm < best.residual_norm) {
            best = f;
            best_p = p;
        }
    }
    double lo = std::max(0.005, best_p - 0.02), hi = best_p + 0.02;
    const double gr = 0.61803398874989485;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    LinFit f1 = fit_model(series, DecayModel::power, x1);
    LinFit f2 = fit_model(series, DecayModel::power, x2);
    for (int it = 0; it < 60; ++it) {
        if (f1.residual_norm < f2.residual_norm) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = fit_model(series, DecayModel::power, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = fit_model(series, DecayModel::power, x2);
        }
    }
    if (f1.residual_norm < best.residual_norm) {
        best = f1;
        best_p = x1;
    }
    if (f2.residual_norm < best.residual_norm) {
        best = f2;
        best_p = x2;
    }
    return {best_p, best};
}

}  // namespace detail

// E_n along a schedule; points are independent and may be evaluated
// concurrently, results are assembled in schedule order.
inline Series sequence_E(double a, double b, double c, double eps, const FunctionSpec& H,
                         const Schedule& schedule, int threads = 1) {
    Series out(schedule.n_values.size());
    detail::parallel_for_index(schedule.n_values.size(), threads, [&](std::size_t i) {
        const long long n = schedule.n_values[i];
        ProductParams p(a, b, c, 1.0, eps, n);
        out[i] = {n, eval_E(p, H).value()};
    });
    return out;
}

inline LimitEstimate extrapolate(const Series& series, DecayModel model) {
    if (series.size() < 4) throw fit_error("extrapolate needs at least 4 points");
    for (const auto& [n, v] : series)
        if (!(v > 0)) throw fit_error("extrapolate requires positive series values");

    LimitEstimate est;
    est.model = model;
    if (model == DecayModel::power) {
        auto [p, fit] = detail::fit_power_best(series);
        est.e_infinity = fit.limit;
        est.fit_params = {fit.limit, fit.beta, p};
        est.residual_norm = fit.residual_norm;
    } else {
        auto fit = detail::fit_model(series, model, 0);
        est.e_infinity = fit.limit;
        est.fit_params = {fit.limit, fit.beta};
        est.residual_norm = fit.residual_norm;
    }
    est.range_warning = !(est.e_infinity > 0 && est.e_infinity <= 1);
    return est;
}

// E-limit and asymptotic constant for an S-function: extrapolates the
// E-series under the 1/log n and 1/n models and keeps the better residual.
inline LimitEstimate estimate_C(double a, double b, double c, double eps,
                                const FunctionSpec& h, const Schedule& schedule,
                                int threads = 1) {
    if (a == b) throw std::invalid_argument("estimate_C requires a != b");
    const FunctionSpec H = to_C(h);
    const Series series = sequence_E(a, b, c, eps, H, schedule, threads);
    LimitEstimate lg = extrapolate(series, DecayModel::inv_log);
    LimitEstimate ln = extrapolate(series, DecayModel::inv_n);
    LimitEstimate est = lg.residual_norm <= ln.residual_norm ? lg : ln;
    est.c_constant = est.e_infinity * k_asymptote(a, b, c, eps).constant;
    return est;
}

// Slope of log D_n against ln n.
inline double fit_growth_exponent(const Series& log_d_series) {
    if (log_d_series.size() < 4)
        throw fit_error("fit_growth_exponent needs at least 4 points");
    auto [mn, mx] = std::minmax_element(
        log_d_series.begin(), log_d_series.end(),
        [](const auto& u, const auto& v) { return u.first < v.first; });
    if (static_cast<double>(mx->first) / static_cast<double>(mn->first) < 100.0)
        throw fit_error("fit_growth_exponent needs at least two decades of n");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(log_d_series.size());
    for (const auto& [nn, y] : log_d_series) {
        const double x = std::log(static_cast<double>(nn));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ConvergenceReport {
    struct ModelFit {
        DecayModel model;
        double amplitude = 0;      // beta in |E_n - L| ~ beta * phi(n)
        double power = 0;          // fitted p (power model only)
        double residual_norm = 0;  // residual of the decay fit
        double e_infinity = 0;     // limit under this model's own extrapolation
    };
    std::vector<ModelFit> ranked;  // best residual first
    bool degenerate = false;       // series shows no variation to fit
    double max_pairwise_limit_gap = 0;  // max relative gap between per-model limits
};

// Fits the decay of |E_n - L| under all three candidate models and ranks
// them.  Reports only; the generating law is an open conjecture.
inline ConvergenceReport fit_convergence_rate(const Series& series, double e_infinity) {
    if (series.size() < 6) throw fit_error("fit_convergence_rate needs at least 6 points");
    ConvergenceReport rep;

    Series diffs;
    double max_diff = 0;
    for (const auto& [n, v] : series) {
        const double d = std::abs(v - e_infinity);
        diffs.push_back({n, d});
        max_diff = std::max(max_diff, d);
    }
    if (max_diff < 1e-14) {
        rep.degenerate = true;
        for (DecayModel m : {DecayModel::inv_log, DecayModel::inv_n, DecayModel::power})
            rep.ranked.push_back({m, 0, 0, 0, e_infinity});
        return rep;
    }

    std::vector<double> limits;
    for (DecayModel m : {DecayModel::inv_log, DecayModel::inv_n, DecayModel::power}) {
        ConvergenceReport::ModelFit fit;
        fit.model = m;
        if (m == DecayModel::power) {
            auto [p, lf] = detail::fit_power_best(diffs);
            fit.power = p;
            fit.amplitude = lf.beta;
            fit.residual_norm = lf.residual_norm;
        } else {
            auto lf = detail::fit_model(diffs, m, 0);
            fit.amplitude = lf.beta;
            fit.residual_norm = lf.residual_norm;
        }
        fit.e_infinity = extrapolate(series, m).e_infinity;
        limits.push_back(fit.e_infinity);
        rep.ranked.push_back(fit);
    }
    std::stable_sort(rep.ranked.begin(), rep.ranked.end(),
                     [](const auto& u, const auto& v) { return u.residual_norm < v.residual_norm; });
    for (std::size_t i = 0; i < limits.size(); ++i)
        for (std::size_t j = i + 1; j < limits.size(); ++j)
            rep.max_pairwise_limit_gap =
                std::max(rep.max_pairwise_limit_gap,
                         std::abs(limits[i] - limits[j]) / std::max(1e-300, std::abs(limits[i])));
    return rep;
}

}  // namespace asymprod

#endif
