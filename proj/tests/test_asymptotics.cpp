#include <doctest.h>

#include <cmath>
#include <random>

#include "asymprod/asymptotics.hpp"
#include "asymprod/exact_rational.hpp"

using namespace asymprod;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("log_gamma: pinned identities") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
    CHECK(log_gamma(1.5) == doctest::Approx(std::log(std::sqrt(kPi) / 2)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("log_gamma recurrence across the working range") {
    // Absolute 1e-12 is only meaningful while log_gamma itself is O(1);
    // at x ~ 1e4 the value is ~8e4 and double rounding alone costs ~1e-11,
    // so the large-x leg is checked relative to the magnitude.
    for (double x = 0.1; x <= 100.0; x *= 1.03) {
        INFO("x = " << x);
        CHECK(std::abs(log_gamma(x + 1) - log_gamma(x) - std::log(x)) <= 1e-12);
    }
    for (double x = 0.1; x <= 1e4; x *= 1.07) {
        const double err = std::abs(log_gamma(x + 1) - log_gamma(x) - std::log(x));
        INFO("x = " << x);
        CHECK(err <= 1e-12 * std::max(1.0, std::abs(log_gamma(x + 1))));
    }
}

TEST_CASE("k_gamma_identity equals the exact rational product") {
    CHECK(k_gamma_identity(3, 3, 4, 17) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(k_gamma_identity(5, 3, 4, 0) == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
    CHECK(k_gamma_identity(5, 3, 4, 1) == doctest::Approx(15.0 / 7.0).epsilon(1e-13));
    CHECK_THROWS_AS(k_gamma_identity(5, 3, 4, -1), std::domain_error);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> den(1, 16);
    for (int trial = 0; trial < 20; ++trial) {
        const int da = den(rng), db = den(rng), dc = den(rng);
        std::uniform_int_distribution<int> num_a((da + 1) / 2, 8 * da);
        std::uniform_int_distribution<int> num_b((db + 1) / 2, 8 * db);
        std::uniform_int_distribution<int> num_c((dc + 1) / 2, 8 * dc);
        const cpp_rational a(num_a(rng), da), b(num_b(rng), db), c(num_c(rng), dc);
        for (long long m : {0LL, 1LL, 10LL, 1000LL}) {
            const double log_exact = log_rational(eval_K_exact(a, b, c, m));
            const double log_id = log_k_gamma_identity(
                a.convert_to<double>(), b.convert_to<double>(), c.convert_to<double>(), m);
            INFO("m = " << m);
            CHECK(std::abs(std::expm1(log_id - log_exact)) <= 1e-10);
        }
    }
}

TEST_CASE("k_asymptote: examples and antisymmetry") {
    const Asymptote eq = k_asymptote(3, 3, 4, kPi / 2);
    CHECK(eq.constant == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eq.exponent == 0.0);

    const Asymptote half = k_asymptote(2, 1, 1, 0.5);
    CHECK(half.constant == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(half.exponent == doctest::Approx(1.0));

    CHECK(k_asymptote(5, 3, 4, kPi / 2).exponent == doctest::Approx(0.5));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.5, 8.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = u(rng), b = u(rng), c = u(rng), eps = u(rng) / 8;
        const Asymptote ab = k_asymptote(a, b, c, eps);
        const Asymptote ba = k_asymptote(b, a, c, eps);
        CHECK(std::abs(ab.constant * ba.constant - 1.0) <= 1e-12);
        CHECK(ab.exponent == doctest::Approx(-ba.exponent).epsilon(1e-15));
    }
}

TEST_CASE("c_upper_bound: values and precondition") {
    CHECK(c_upper_bound(2, 1, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
    const double expected =
        std::exp(log_gamma(0.75) - log_gamma(1.25)) * std::sqrt(kPi / 8);
    CHECK(c_upper_bound(5, 3, 4, kPi / 2) == doctest::Approx(expected).epsilon(1e-13));
    // a -> b limit approaches 1
    CHECK(c_upper_bound(3.0 + 1e-9, 3, 4, kPi / 2) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK_THROWS_AS(c_upper_bound(3, 5, 4, kPi / 2), std::domain_error);
    CHECK_THROWS_AS(c_upper_bound(3, 3, 4, kPi / 2), std::domain_error);
}

TEST_CASE("exercise_limit: formula, trivial case, large-k monotonicity") {
    CHECK(exercise_limit(3, 3, 4, 2) == doctest::Approx(1.0));
    CHECK(exercise_limit(5, 3, 4, 2) == doctest::Approx(std::exp(-0.25)).epsilon(1e-15));
    CHECK_THROWS_AS(exercise_limit(5, 3, 4, 1), std::domain_error);

    // a - b = c: value decreases toward e^{-1} monotonically in k
    double prev = exercise_limit(2, 1, 1, 2);
    for (int k = 3; k <= 50; ++k) {
        const double v = exercise_limit(2, 1, 1, k);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev == doctest::Approx(std::exp(-1.0)).epsilon(0.03));
}

TEST_CASE("growth_exponent") {
    CHECK(growth_exponent(5, 3, 4) == doctest::Approx(0.5));
    CHECK(growth_exponent(3, 3, 4) == 0.0);
    CHECK(growth_exponent(3, 5, 4) == doctest::Approx(-0.5));
    CHECK_THROWS_AS(growth_exponent(1, 1, 0), std::domain_error);
}
