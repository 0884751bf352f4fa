#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "decosolv/bath.hpp"
#include "decosolv/decoherence.hpp"
#include "decosolv/solvation.hpp"
#include "decosolv/units.hpp"

using namespace decosolv;
using bath::BathMode;
using solvation::GapTrajectory;
using solvation::ResponseCurve;

namespace {

GapTrajectory cosine_trajectory(double omega, double dt, std::size_t n) {
    GapTrajectory trajectory;
    trajectory.dt = dt;
    trajectory.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        trajectory.samples[i] = std::cos(omega * dt * static_cast<double>(i));
    }
    return trajectory;
}

ResponseCurve gaussian_response(double tau, double dt, std::size_t n) {
    ResponseCurve curve;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = dt * static_cast<double>(i);
        curve.emplace_back(t, std::exp(-t * t / (2.0 * tau * tau)));
    }
    return curve;
}

} // namespace

TEST_CASE("solvation exponent with the linear-response variance is temperature-independent") {
    const std::vector<BathMode> modes{{0.9, 0.04}, {1.7, 0.11}, {3.2, 0.02}};
    double lambda_total = 0.0;
    double lambda_omega2 = 0.0;
    for (const auto& mode : modes) {
        lambda_total += mode.lambda;
        lambda_omega2 += mode.lambda * mode.omega * mode.omega;
    }

    double previous = 0.0;
    for (const double temperature : {120.0, 298.0, 700.0}) {
        const double variance = 2.0 * units::thermal_energy(temperature) * lambda_total;
        const double alpha = solvation::solvation_exponent(modes, variance, temperature);
        CHECK(alpha == doctest::Approx(lambda_omega2 / (2.0 * lambda_total)).epsilon(1e-14));
        if (previous != 0.0) CHECK(alpha == doctest::Approx(previous).epsilon(1e-14));
        previous = alpha;
    }
}

TEST_CASE("single-mode solvation timescale is the inverse frequency") {
    const double omega = 2.3;
    const std::vector<BathMode> modes{{omega, 0.2}};
    const double temperature = 298.0;
    const double variance = 2.0 * units::thermal_energy(temperature) * 0.2;
    const double alpha = solvation::solvation_exponent(modes, variance, temperature);
    const double tau_g = 1.0 / std::sqrt(2.0 * alpha);
    CHECK(tau_g == doctest::Approx(1.0 / omega).epsilon(1e-13));
}

TEST_CASE("two equal-coupling modes at omega and 2 omega") {
    const double omega = 1.6;
    const double lambda = 0.05;
    const std::vector<BathMode> modes{{omega, lambda}, {2.0 * omega, lambda}};
    const double temperature = 250.0;
    const double variance = 2.0 * units::thermal_energy(temperature) * 2.0 * lambda;
    const double alpha = solvation::solvation_exponent(modes, variance, temperature);
    const double tau_g = 1.0 / std::sqrt(2.0 * alpha);
    CHECK(tau_g == doctest::Approx(std::sqrt(2.0 / (5.0 * omega * omega))).epsilon(1e-13));
}

TEST_CASE("solvation exponent is additive over modes at fixed variance") {
    const std::vector<BathMode> part_a{{0.7, 0.03}, {1.1, 0.06}};
    const std::vector<BathMode> part_b{{2.4, 0.01}};
    std::vector<BathMode> all = part_a;
    all.insert(all.end(), part_b.begin(), part_b.end());
    const double variance = 0.02;
    const double temperature = 300.0;
    CHECK(solvation::solvation_exponent(all, variance, temperature) ==
          doctest::Approx(solvation::solvation_exponent(part_a, variance, temperature) +
                          solvation::solvation_exponent(part_b, variance, temperature))
              .epsilon(1e-14));
}

TEST_CASE("solvation exponent rejects invalid inputs") {
    const std::vector<BathMode> modes{{1.0, 0.1}};
    CHECK_THROWS_AS(solvation::solvation_exponent(modes, 0.0, 300.0), std::domain_error);
    CHECK_THROWS_AS(solvation::solvation_exponent(modes, -1.0, 300.0), std::domain_error);
    CHECK_THROWS_AS(solvation::solvation_exponent(modes, 0.01, 0.0), std::domain_error);
    CHECK_THROWS_AS(solvation::solvation_exponent({}, 0.01, 300.0), std::domain_error);
}

TEST_CASE("variance from the Stokes shift and back") {
    const double variance = solvation::variance_from_stokes(1.7, 298.0);
    CHECK(variance == doctest::Approx(0.04366).epsilon(1e-4));
    CHECK(std::sqrt(variance) == doctest::Approx(0.2089).epsilon(1e-3));
    CHECK(std::sqrt(variance) == doctest::Approx(0.21).epsilon(0.005));

    CHECK(solvation::variance_from_stokes(0.0, 298.0) == 0.0);
    CHECK_THROWS_AS(solvation::variance_from_stokes(-1.0, 298.0), std::domain_error);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> stokes_dist(1e-3, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double stokes = stokes_dist(rng);
        const double round_trip =
            solvation::stokes_from_variance(solvation::variance_from_stokes(stokes, 298.0), 298.0);
        CHECK(round_trip == doctest::Approx(stokes).epsilon(1e-12));
    }
}

TEST_CASE("gap statistics constructors keep the linear-response tie") {
    const auto stats = solvation::GapStatistics::linear_response(0.56, 0.85, 298.0);
    CHECK(stats.variance ==
          doctest::Approx(2.0 * 0.85 * units::thermal_energy(298.0)).epsilon(1e-15));

    const auto from_rms = solvation::GapStatistics::from_rms(0.0, 0.21, 298.0);
    CHECK(from_rms.variance == doctest::Approx(0.0441).epsilon(1e-12));
    CHECK(from_rms.lambda_reorg ==
          doctest::Approx(0.0441 / (2.0 * units::thermal_energy(298.0))).epsilon(1e-12));

    const auto from_stokes = solvation::GapStatistics::from_stokes(0.0, 1.7, 298.0);
    CHECK(from_stokes.lambda_reorg == doctest::Approx(0.85).epsilon(1e-12));
    CHECK_THROWS_AS(solvation::GapStatistics::from_rms(0.0, -0.1, 298.0), std::domain_error);
    CHECK_THROWS_AS(solvation::GapStatistics::linear_response(0.0, 0.1, -5.0), std::domain_error);
}

TEST_CASE("autocorrelation of a pure cosine") {
    const double omega = 1.2;
    const double dt = 0.05;
    const std::size_t n = 20000;
    const auto trajectory = cosine_trajectory(omega, dt, n);
    const auto curve = solvation::estimate_response(trajectory, 10.0);

    CHECK(curve.front().first == 0.0);
    CHECK(curve.front().second == 1.0);
    for (const auto& [t, c] : curve) {
        CHECK(c == doctest::Approx(std::cos(omega * t)).epsilon(0.0).scale(1.0));
        CHECK(std::abs(c - std::cos(omega * t)) < 5e-3);  // O(1/N) estimator bias
    }
}

TEST_CASE("autocorrelation of white noise decays immediately") {
    std::mt19937 rng(99);
    std::normal_distribution<double> noise(0.0, 0.3);
    GapTrajectory trajectory;
    trajectory.dt = 0.1;
    const std::size_t n = 40000;
    trajectory.samples.resize(n);
    for (auto& sample : trajectory.samples) sample = noise(rng);

    const auto curve = solvation::estimate_response(trajectory, 2.0);
    const double bound = 3.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 1; k < curve.size(); ++k) {
        CHECK(std::abs(curve[k].second) < bound);
    }
}

TEST_CASE("autocorrelation estimator is symmetric under time reversal") {
    std::mt19937 rng(17);
    std::normal_distribution<double> noise(0.0, 1.0);
    GapTrajectory forward;
    forward.dt = 0.2;
    forward.samples.resize(512);
    double walk = 0.0;
    for (auto& sample : forward.samples) {
        walk = 0.95 * walk + noise(rng);
        sample = walk;
    }
    GapTrajectory backward = forward;
    std::reverse(backward.samples.begin(), backward.samples.end());

    const auto curve_f = solvation::estimate_response(forward, 10.0);
    const auto curve_b = solvation::estimate_response(backward, 10.0);
    REQUIRE(curve_f.size() == curve_b.size());
    for (std::size_t k = 0; k < curve_f.size(); ++k) {
        CHECK(curve_f[k].second == doctest::Approx(curve_b[k].second).epsilon(1e-12));
    }
}

TEST_CASE("autocorrelation estimator rejects degenerate input") {
    GapTrajectory constant;
    constant.dt = 0.1;
    constant.samples.assign(100, 0.56);
    CHECK_THROWS_AS(solvation::estimate_response(constant, 1.0), std::domain_error);

    GapTrajectory tiny = cosine_trajectory(1.0, 0.1, 100);
    // max_lag beyond half the trajectory violates the overlap precondition.
    CHECK_THROWS_AS(solvation::estimate_response(tiny, 6.0), std::domain_error);
    CHECK_NOTHROW(solvation::estimate_response(tiny, 4.9));
}

TEST_CASE("fitting an exact Gaussian recovers its timescale") {
    const auto curve = gaussian_response(10.6, 0.5, 60);
    CHECK(solvation::fit_gaussian_timescale(curve, 0.6) == doctest::Approx(10.6).epsilon(1e-6));
}

TEST_CASE("fit window threshold sensitivity on an exact Gaussian") {
    const auto curve = gaussian_response(7.3, 0.25, 120);
    for (const double threshold : {0.9, 0.8, 0.6}) {
        CHECK(solvation::fit_gaussian_timescale(curve, threshold) ==
              doctest::Approx(7.3).epsilon(1e-6));
    }
}

TEST_CASE("short-time fit of a cosine recovers the inverse frequency") {
    const double omega = 0.8;
    ResponseCurve curve;
    for (int i = 0; i < 400; ++i) {
        const double t = 0.01 * i;
        curve.emplace_back(t, std::cos(omega * t));
    }
    const double tau = solvation::fit_gaussian_timescale(curve, 0.9);
    CHECK(tau == doctest::Approx(1.0 / omega).epsilon(0.02));
}

TEST_CASE("short-time fit of a golden-rule curve recovers the Gaussian decoherence time") {
    // Narrow bath: the fit window sits inside the quadratic regime.
    const std::vector<BathMode> modes{{0.9, 0.05}, {1.0, 0.05}, {1.1, 0.05}};
    const double temperature = 298.0;
    const double alpha = decoherence::gaussian_decoherence_exponent(
        modes, temperature, bath::WidthModel::TanhHarmonic);
    ResponseCurve curve;
    for (int i = 0; i < 2000; ++i) {
        const double t = 5e-4 * i;
        curve.emplace_back(t, std::exp(-decoherence::golden_rule_exponent(modes, temperature, t)));
    }
    const double tau = solvation::fit_gaussian_timescale(curve, 0.9);
    CHECK(tau == doctest::Approx(1.0 / std::sqrt(2.0 * alpha)).epsilon(0.01));
}

TEST_CASE("fit is invariant under grid rescaling with inverse timescale rescaling") {
    const auto curve = gaussian_response(3.0, 0.1, 80);
    ResponseCurve stretched;
    for (const auto& [t, c] : curve) stretched.emplace_back(2.0 * t, c);
    const double tau = solvation::fit_gaussian_timescale(curve, 0.6);
    const double tau_stretched = solvation::fit_gaussian_timescale(stretched, 0.6);
    CHECK(tau_stretched == doctest::Approx(2.0 * tau).epsilon(1e-12));
}

TEST_CASE("fit failures") {
    using solvation::FitError;
    // Too few points above the threshold.
    ResponseCurve steep{{0.0, 1.0}, {1.0, 0.1}, {2.0, 0.05}, {3.0, 0.01}};
    CHECK_THROWS_AS(solvation::fit_gaussian_timescale(steep, 0.6), FitError);

    // Does not start at (0, ~1).
    ResponseCurve shifted{{1.0, 1.0}, {2.0, 0.9}, {3.0, 0.8}, {4.0, 0.7}};
    CHECK_THROWS_AS(solvation::fit_gaussian_timescale(shifted, 0.6), FitError);

    // Rising curve has no decaying window.
    ResponseCurve rising{{0.0, 1.0}, {1.0, 1.01}, {2.0, 1.02}, {3.0, 1.03}};
    CHECK_THROWS_AS(solvation::fit_gaussian_timescale(rising, 0.6), FitError);

    CHECK_THROWS_AS(solvation::fit_gaussian_timescale({}, 0.6), FitError);
}

TEST_CASE("gap trajectory file round trip and validation") {
    const auto path = std::filesystem::temp_directory_path() / "decosolv_test_traj.dat";
    GapTrajectory original = cosine_trajectory(0.7, 0.25, 64);
    original.to_file(path);

    const auto loaded = GapTrajectory::from_file(path);
    CHECK(loaded.dt == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(loaded.samples.size() == original.samples.size());
    for (std::size_t i = 0; i < loaded.samples.size(); ++i) {
        CHECK(loaded.samples[i] == doctest::Approx(original.samples[i]).epsilon(1e-15));
    }
    std::filesystem::remove(path);

    const auto bad_path = std::filesystem::temp_directory_path() / "decosolv_test_bad.dat";
    {
        std::ofstream out(bad_path);
        out << "0.0 1.0\n0.1 0.9\n0.25 0.8\n";  // non-uniform spacing
    }
    CHECK_THROWS(GapTrajectory::from_file(bad_path));
    std::filesystem::remove(bad_path);
}
