#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "decosolv/bath.hpp"
#include "decosolv/decoherence.hpp"
#include "decosolv/numeric.hpp"
#include "decosolv/units.hpp"

using namespace decosolv;
using bath::BathMode;
using bath::SpectralDensity;
using bath::WidthModel;
using decoherence::GaussianCurve;

namespace {

double coth(double x) { return 1.0 / std::tanh(x); }

double thermal_x(double omega, double temperature) {
    return units::hbar * omega / (2.0 * units::k_boltzmann * temperature);
}

std::vector<double> linspace(double t_max, std::size_t n) {
    std::vector<double> times(n);
    for (std::size_t i = 0; i < n; ++i) {
        times[i] = t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return times;
}

} // namespace

TEST_CASE("single-mode Gaussian exponent equals the short-time golden-rule coefficient") {
    const double omega = 1.4;
    const double lambda = 0.08;
    const double temperature = 298.0;
    const std::vector<BathMode> modes{{omega, lambda}};

    const double alpha =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::TanhHarmonic);
    const double expected = lambda * omega * coth(thermal_x(omega, temperature)) / (2.0 * units::hbar);
    CHECK(alpha == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("zero coupling means no decoherence") {
    const std::vector<BathMode> modes{{1.0, 0.0}, {2.0, 0.0}};
    for (const auto model :
         {WidthModel::TanhHarmonic, WidthModel::NitzanA, WidthModel::HighTemperature}) {
        CHECK(decoherence::gaussian_decoherence_exponent(modes, 300.0, model) == 0.0);
    }
}

TEST_CASE("the Gaussian exponent is additive over modes") {
    const std::vector<BathMode> one{{1.3, 0.05}};
    const std::vector<BathMode> two{{1.3, 0.05}, {1.3, 0.05}};
    const double alpha_one =
        decoherence::gaussian_decoherence_exponent(one, 250.0, WidthModel::TanhHarmonic);
    const double alpha_two =
        decoherence::gaussian_decoherence_exponent(two, 250.0, WidthModel::TanhHarmonic);
    CHECK(alpha_two == doctest::Approx(2.0 * alpha_one).epsilon(1e-14));

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> omega_dist(0.1, 5.0);
    std::uniform_real_distribution<double> lambda_dist(0.0, 0.4);
    std::vector<BathMode> part_a, part_b, all;
    for (int i = 0; i < 12; ++i) {
        const BathMode mode{omega_dist(rng), lambda_dist(rng)};
        ((i % 2 == 0) ? part_a : part_b).push_back(mode);
        all.push_back(mode);
    }
    const double whole =
        decoherence::gaussian_decoherence_exponent(all, 320.0, WidthModel::NitzanA);
    const double parts =
        decoherence::gaussian_decoherence_exponent(part_a, 320.0, WidthModel::NitzanA) +
        decoherence::gaussian_decoherence_exponent(part_b, 320.0, WidthModel::NitzanA);
    CHECK(whole == doctest::Approx(parts).epsilon(1e-12));
}

TEST_CASE("high-temperature and tanh exponents approach each other as x -> 0") {
    const double omega = 0.5;
    const double lambda = 0.1;
    const std::vector<BathMode> modes{{omega, lambda}};
    const double temperature = units::hbar * omega / (2.0 * units::k_boltzmann * 1e-3);  // x = 1e-3

    const double alpha_high =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::HighTemperature);
    const double alpha_tanh =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::TanhHarmonic);

    CHECK(alpha_high == doctest::Approx(lambda * omega * omega /
                                        (12.0 * units::thermal_energy(temperature)))
                            .epsilon(1e-12));
    CHECK(alpha_tanh ==
          doctest::Approx(lambda * omega * coth(1e-3) / (2.0 * units::hbar)).epsilon(1e-10));
    CHECK(alpha_high / alpha_tanh == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("decoherence time follows the exponent convention") {
    CHECK(decoherence::decoherence_time(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(decoherence::decoherence_time(2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(decoherence::decoherence_time(0.0), std::domain_error);
    CHECK_THROWS_AS(decoherence::decoherence_time(-1.0), std::domain_error);
}

TEST_CASE("Gaussian curve type keeps alpha and tau consistent") {
    const auto curve = GaussianCurve::from_alpha(0.5);
    CHECK(curve.tau == doctest::Approx(1.0).epsilon(1e-15));
    const auto from_tau = GaussianCurve::from_tau(10.6);
    CHECK(from_tau.alpha == doctest::Approx(1.0 / (2.0 * 10.6 * 10.6)).epsilon(1e-15));
    CHECK(from_tau(0.0) == 1.0);
    CHECK(from_tau(10.6) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(GaussianCurve::from_alpha(0.0), std::domain_error);
    CHECK_THROWS_AS(GaussianCurve::from_tau(-1.0), std::domain_error);
}

TEST_CASE("golden-rule exponent: closed single-mode form") {
    const double omega = 1.1;
    const double lambda = 0.07;
    const double temperature = 310.0;
    const std::vector<BathMode> modes{{omega, lambda}};

    CHECK(decoherence::golden_rule_exponent(modes, temperature, 0.0) == 0.0);

    const double t_half_period = std::numbers::pi / omega;
    const double expected =
        2.0 * lambda * coth(thermal_x(omega, temperature)) / (units::hbar * omega);
    CHECK(decoherence::golden_rule_exponent(modes, temperature, t_half_period) ==
          doctest::Approx(expected).epsilon(1e-12));

    CHECK_THROWS_AS(decoherence::golden_rule_exponent(modes, temperature, -1.0),
                    std::domain_error);
    CHECK_THROWS_AS(decoherence::golden_rule_exponent(modes, 0.0, 1.0), std::domain_error);
}

TEST_CASE("golden-rule exponent approaches the Gaussian exponent at short times") {
    const auto density = SpectralDensity::ohmic_exponential(0.3, 1.0);
    const double omega_max = density.default_omega_max();
    const auto discretized = bath::discretize(density, 4000, omega_max);
    const double temperature = 298.0;

    const double alpha = decoherence::gaussian_decoherence_exponent(
        discretized.modes, temperature, WidthModel::TanhHarmonic);
    const double t = 1e-3 / omega_max;
    const double ratio =
        decoherence::golden_rule_exponent(discretized.modes, temperature, t) / (alpha * t * t);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("golden-rule curves start at one and dominate the Gaussian curve") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> omega_dist(0.05, 8.0);
    std::uniform_real_distribution<double> lambda_dist(0.0, 0.5);
    std::uniform_real_distribution<double> temperature_dist(50.0, 600.0);
    std::uniform_int_distribution<int> count_dist(1, 25);

    const auto times = linspace(20.0, 80);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BathMode> modes;
        for (int i = 0, n = count_dist(rng); i < n; ++i) {
            modes.push_back({omega_dist(rng), lambda_dist(rng)});
        }
        modes.push_back({1.0, 0.05});  // keep the total coupling positive
        const double temperature = temperature_dist(rng);

        const auto curve = decoherence::golden_rule_curve(modes, temperature, times);
        const double alpha = decoherence::gaussian_decoherence_exponent(
            modes, temperature, WidthModel::TanhHarmonic);
        const auto gaussian =
            decoherence::gaussian_curve(GaussianCurve::from_alpha(alpha), times);

        CHECK(curve.values.front() == 1.0);
        for (std::size_t i = 0; i < times.size(); ++i) {
            CHECK(curve.values[i] > 0.0);
            CHECK(curve.values[i] <= 1.0);
            CHECK(curve.values[i] >= gaussian.values[i] - 1e-12);
        }
    }
}

TEST_CASE("short-time agreement obeys the cosine-series bound") {
    const auto density = SpectralDensity::ohmic_exponential(0.25, 0.8);
    const double omega_max = density.default_omega_max();
    const auto modes = bath::discretize(density, 4000, omega_max).modes;
    const double temperature = 298.0;
    const double alpha = decoherence::gaussian_decoherence_exponent(modes, temperature,
                                                                    WidthModel::TanhHarmonic);
    for (const double scaled_time : {1e-3, 1e-2, 1e-1, 1.0}) {
        const double t = scaled_time / omega_max;
        const double exponent = decoherence::golden_rule_exponent(modes, temperature, t);
        const double gaussian_exponent = alpha * t * t;
        const double bound = scaled_time * scaled_time / 12.0;
        CHECK(std::abs(exponent - gaussian_exponent) / gaussian_exponent <= bound * (1.0 + 1e-9));
    }
}

TEST_CASE("quadrature and discrete-sum exponents agree for an Ohmic bath") {
    const double omega_c = 1.0;
    const auto density = SpectralDensity::ohmic_exponential(0.3, omega_c);
    const double omega_max = density.default_omega_max();
    const auto modes = bath::discretize(density, 4000, omega_max).modes;
    const double temperature = 298.0;

    decoherence::QuadratureOptions options;
    options.omega_max = omega_max;
    for (const double t : linspace(10.0 / omega_c, 21)) {
        const double discrete = decoherence::golden_rule_exponent(modes, temperature, t);
        const double continuous =
            decoherence::golden_rule_exponent(density, temperature, t, options);
        CHECK(std::abs(discrete - continuous) < 1e-4);
    }
}

TEST_CASE("quadrature reports its achieved tolerance on failure") {
    const auto density = SpectralDensity::ohmic_exponential(0.3, 1.0);
    decoherence::QuadratureOptions options;
    options.relative_tolerance = 1e-17;
    options.max_depth = 0;
    try {
        decoherence::golden_rule_exponent(density, 298.0, 8.0, options);
        FAIL("expected QuadratureError");
    } catch (const decoherence::QuadratureError& error) {
        CHECK(error.achieved_tolerance > error.requested_tolerance);
        CHECK(std::string(error.what()).find("achieved") != std::string::npos);
    }
}

TEST_CASE("golden-rule curve from a continuous density matches the discrete path") {
    const auto density = SpectralDensity::debye(0.1, 0.4);
    const double omega_max = density.default_omega_max();
    const auto modes = bath::discretize(density, 8000, omega_max).modes;
    const auto times = linspace(8.0, 9);
    decoherence::QuadratureOptions options;
    options.omega_max = omega_max;

    const auto continuous = decoherence::golden_rule_curve(density, 300.0, times, options);
    const auto discrete = decoherence::golden_rule_curve(modes, 300.0, times);
    CHECK(continuous.kind == decoherence::CurveKind::GoldenRule);
    for (std::size_t i = 0; i < times.size(); ++i) {
        CHECK(continuous.values[i] == doctest::Approx(discrete.values[i]).epsilon(1e-4));
    }
}
