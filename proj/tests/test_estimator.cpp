#include <doctest.h>

#include <cmath>

#include "asymprod/catalog.hpp"
#include "asymprod/estimator.hpp"

using namespace asymprod;

namespace {
const double kPi = 3.14159265358979323846;

Schedule default_schedule() { return Schedule::geometric(1000, 2.0, 11); }

Series synth(double L, double beta, DecayModel model, double p = 0) {
    Series s;
    for (long long n : default_schedule().n_values) {
        double phi = 0;
        switch (model) {
            case DecayModel::inv_log: phi = 1.0 / std::log((double)n); break;
            case DecayModel::inv_n: phi = 1.0 / (double)n; break;
            case DecayModel::power: phi = std::pow((double)n, -p); break;
        }
        s.push_back({n, L + beta * phi});
    }
    return s;
}
}  // namespace

TEST_CASE("Schedule::geometric is strictly increasing and validated") {
    const Schedule s = Schedule::geometric(1000, 2.0, 11);
    REQUIRE(s.n_values.size() == 11);
    CHECK(s.n_values.front() == 1000);
    CHECK(s.n_values.back() == 1024000);
    for (std::size_t i = 1; i < s.n_values.size(); ++i)
        CHECK(s.n_values[i] > s.n_values[i - 1]);
    CHECK_THROWS_AS(Schedule::geometric(0, 2.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Schedule::geometric(10, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Schedule::geometric(10, 2.0, 0), std::invalid_argument);
}

TEST_CASE("extrapolate: constant and synthetic series") {
    Series constant;
    for (long long n : default_schedule().n_values) constant.push_back({n, 0.7});
    const LimitEstimate ce = extrapolate(constant, DecayModel::inv_log);
    CHECK(ce.e_infinity == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(std::abs(ce.fit_params[1]) <= 1e-12);
    CHECK(ce.residual_norm <= 1e-13);

    const LimitEstimate lg = extrapolate(synth(0.6, 2.0, DecayModel::inv_log),
                                         DecayModel::inv_log);
    CHECK(std::abs(lg.e_infinity - 0.6) <= 1e-6);

    const LimitEstimate ln = extrapolate(synth(0.6, 2.0, DecayModel::inv_n),
                                         DecayModel::inv_n);
    CHECK(std::abs(ln.e_infinity - 0.6) <= 1e-6);

    // wrong model leaves a visibly larger residual
    const Series inv_n_data = synth(0.6, 2.0, DecayModel::inv_n);
    CHECK(extrapolate(inv_n_data, DecayModel::inv_log).residual_norm >
          100 * extrapolate(inv_n_data, DecayModel::inv_n).residual_norm);

    // power model recovers a synthetic n^{-0.37} decay
    const LimitEstimate pw = extrapolate(synth(0.6, 2.0, DecayModel::power, 0.37),
                                         DecayModel::power);
    CHECK(std::abs(pw.e_infinity - 0.6) <= 1e-4);
    REQUIRE(pw.fit_params.size() == 3);
    CHECK(pw.fit_params[2] == doctest::Approx(0.37).epsilon(1e-3));

    CHECK_THROWS_AS(extrapolate(Series{{10, 1.0}, {20, 0.9}}, DecayModel::inv_n), fit_error);
    CHECK(extrapolate(synth(1.5, 2.0, DecayModel::inv_n), DecayModel::inv_n).range_warning);
}

TEST_CASE("sequence_E: trivial cases and thread determinism") {
    const FunctionSpec one = to_C(*find_function("identity"));
    for (const auto& [n, e] : sequence_E(5, 3, 4, 0.9, one, default_schedule()))
        CHECK(e == 1.0);

    for (const auto& [n, e] : sequence_E(3, 3, 4, kPi / 2, to_C(*find_function("sin")),
                                         default_schedule()))
        CHECK(e == 1.0);

    const FunctionSpec sinc = to_C(*find_function("sin"));
    const Series s1 = sequence_E(5, 3, 4, kPi / 2, sinc, default_schedule(), 1);
    const Series s4 = sequence_E(5, 3, 4, kPi / 2, sinc, default_schedule(), 4);
    REQUIRE(s1.size() == s4.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i].first == s4[i].first);
        CHECK(s1[i].second == s4[i].second);  // bitwise: deterministic reduction
    }
    // Geometric-schedule values are NOT strictly monotone: E_n carries a small
    // sawtooth from the integer term count m(n) (it decreases at m-increments
    // and creeps up in between), so only boundedness and settling are asserted
    // here; the jump-aligned decrease itself is covered by check_E_monotone.
    for (const auto& [n, e] : s1) {
        CHECK(e > 0);
        CHECK(e < 1);
    }
    const double spread_head = std::abs(s1[1].second - s1[0].second);
    const double spread_tail = std::abs(s1.back().second - s1[s1.size() - 2].second);
    CHECK(spread_tail < spread_head);
    CHECK(spread_tail < 1e-6);
}

TEST_CASE("estimate_C: identity equality case and sin strict bound") {
    const LimitEstimate id = estimate_C(5, 3, 4, 0.9, *find_function("identity"),
                                        default_schedule());
    CHECK(id.e_infinity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.c_constant ==
          doctest::Approx(k_asymptote(5, 3, 4, 0.9).constant).epsilon(1e-12));

    const LimitEstimate si = estimate_C(5, 3, 4, kPi / 2, *find_function("sin"),
                                        default_schedule());
    CHECK(si.e_infinity > 0);
    CHECK(si.e_infinity < 1);
    CHECK(si.c_constant < c_upper_bound(5, 3, 4, kPi / 2));
    CHECK(!si.range_warning);

    CHECK_THROWS_AS(estimate_C(3, 3, 4, kPi / 2, *find_function("sin"), default_schedule()),
                    std::invalid_argument);
}

TEST_CASE("estimate_C: a<b estimate is reciprocal of the swapped case") {
    const LimitEstimate ab = estimate_C(5, 3, 4, kPi / 2, *find_function("sin"),
                                        default_schedule());
    const LimitEstimate ba = estimate_C(3, 5, 4, kPi / 2, *find_function("sin"),
                                        default_schedule());
    CHECK(ba.e_infinity == doctest::Approx(1.0 / ab.e_infinity).epsilon(5e-3));
}

TEST_CASE("fit_growth_exponent: identity slope, a=b, and span guards") {
    const FunctionSpec* id = find_function("identity");
    Series logd, logd_eq;
    for (long long n : default_schedule().n_values) {
        logd.push_back({n, eval_D(ProductParams(2, 1, 1, 1.0, 0.9, n), *id).log_value});
        logd_eq.push_back({n, eval_D(ProductParams(2, 2, 1, 1.0, 0.9, n), *id).log_value});
    }
    CHECK(fit_growth_exponent(logd) == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(fit_growth_exponent(logd_eq)) <= 1e-12);

    CHECK_THROWS_AS(fit_growth_exponent(Series{{10, 1.0}, {20, 2.0}, {40, 3.0}}), fit_error);
    CHECK_THROWS_AS(
        fit_growth_exponent(Series{{10, 1.0}, {20, 2.0}, {40, 3.0}, {80, 4.0}, {160, 5.0}}),
        fit_error);  // under two decades
}

TEST_CASE("fit_convergence_rate: synthetic ranking and degenerate flag") {
    const Series lg = synth(0.6, 2.0, DecayModel::inv_log);
    const ConvergenceReport r1 =
        fit_convergence_rate(lg, extrapolate(lg, DecayModel::inv_log).e_infinity);
    REQUIRE(r1.ranked.size() == 3);
    CHECK(r1.ranked.front().model == DecayModel::inv_log);
    CHECK(!r1.degenerate);

    const Series ln = synth(0.6, 2.0, DecayModel::inv_n);
    const ConvergenceReport r2 =
        fit_convergence_rate(ln, extrapolate(ln, DecayModel::inv_n).e_infinity);
    // n^{-p} with fitted p = 1 is the same law as 1/n; both labels are correct
    const auto& top = r2.ranked.front();
    const bool identified = top.model == DecayModel::inv_n ||
                            (top.model == DecayModel::power && std::abs(top.power - 1) < 1e-3);
    CHECK(identified);

    Series constant;
    for (long long n : default_schedule().n_values) constant.push_back({n, 0.25});
    const ConvergenceReport r3 = fit_convergence_rate(constant, 0.25);
    CHECK(r3.degenerate);
    REQUIRE(r3.ranked.size() == 3);

    CHECK_THROWS_AS(fit_convergence_rate(Series{{1, 1.0}, {2, 0.9}}, 0.5), fit_error);
}
