#include "decosolv/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "decosolv/numeric.hpp"
#include "decosolv/units.hpp"

namespace decosolv::oracle {

namespace {

// Uniform doubles built from the specified mt19937_64 output stream, and a
// Box-Muller transform on top, so trajectories are bit-reproducible across
// standard libraries (std::normal_distribution is not pinned down).
double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
}

double uniform_half_open(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

std::pair<double, double> standard_normal_pair(std::mt19937_64& rng) {
    const double radius = std::sqrt(-2.0 * std::log(uniform_open(rng)));
    const double angle = 2.0 * std::numbers::pi * uniform_half_open(rng);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t sample_index) {
    const auto stream = numeric::splitmix64(seed + 0x9E3779B97F4A7C15ULL * (sample_index + 1));
    return std::mt19937_64(stream);
}

} // namespace

void validate(const EnsembleSpec& spec) {
    bath::validate_modes(spec.modes);
    if (!(spec.temperature > 0.0)) throw std::domain_error("temperature must be positive");
    if (spec.n_samples < 1) throw std::domain_error("need at least one sample");
    if (!(spec.dt > 0.0)) throw std::domain_error("dt must be positive");
    if (spec.n_steps < 2) throw std::domain_error("need at least two steps");
}

OscillatorState evolve(const OscillatorState& state, double omega, double time) {
    const double c = std::cos(omega * time);
    const double s = std::sin(omega * time);
    return {state.position * c + state.velocity * s, -state.position * s + state.velocity * c};
}

solvation::GapTrajectory sample_gap_trajectory(const EnsembleSpec& spec, std::size_t sample_index) {
    validate(spec);
    if (sample_index >= spec.n_samples) throw std::domain_error("sample index out of range");

    auto rng = sample_rng(spec.seed, sample_index);
    const double thermal = units::thermal_energy(spec.temperature);

    const std::size_t n_modes = spec.modes.size();
    std::vector<OscillatorState> initial(n_modes);
    std::vector<double> amplitude(n_modes);
    for (std::size_t m = 0; m < n_modes; ++m) {
        const auto [xi, zeta] = standard_normal_pair(rng);
        initial[m] = {xi, zeta};
        // Equilibrium classical variance of this mode's gap contribution
        // is 2 lambda kB T.
        amplitude[m] = std::sqrt(2.0 * spec.modes[m].lambda * thermal);
    }

    solvation::GapTrajectory trajectory;
    trajectory.dt = spec.dt;
    trajectory.samples.resize(spec.n_steps);
    for (std::size_t i = 0; i < spec.n_steps; ++i) {
        const double t = spec.dt * static_cast<double>(i);
        double gap = 0.0;
        for (std::size_t m = 0; m < n_modes; ++m) {
            gap += amplitude[m] * evolve(initial[m], spec.modes[m].omega, t).position;
        }
        trajectory.samples[i] = gap;
    }
    return trajectory;
}

std::vector<solvation::GapTrajectory> sample_gap_trajectories(const EnsembleSpec& spec) {
    validate(spec);
    std::vector<solvation::GapTrajectory> trajectories;
    trajectories.reserve(spec.n_samples);
    for (std::size_t s = 0; s < spec.n_samples; ++s) {
        trajectories.push_back(sample_gap_trajectory(spec, s));
    }
    return trajectories;
}

solvation::ResponseCurve analytic_classical_response(std::span<const bath::BathMode> modes,
                                                     const std::vector<double>& times) {
    const double total = bath::total_reorganization(modes);
    if (!(total > 0.0)) throw std::domain_error("bath has zero total reorganization energy");
    solvation::ResponseCurve curve;
    curve.reserve(times.size());
    for (const double t : times) {
        double acc = 0.0;
        for (const auto& mode : modes) acc += mode.lambda * std::cos(mode.omega * t);
        curve.emplace_back(t, acc / total);
    }
    return curve;
}

EnsembleResponse ensemble_response(const EnsembleSpec& spec, double max_lag) {
    validate(spec);

    EnsembleResponse result;
    result.n_samples = spec.n_samples;

    std::vector<double> sum;           // of per-sample C(t)
    std::vector<double> sum_squares;
    double variance_sum = 0.0;
    double variance_sum_squares = 0.0;

    for (std::size_t s = 0; s < spec.n_samples; ++s) {
        const auto trajectory = sample_gap_trajectory(spec, s);
        const auto estimate = solvation::estimate_response(trajectory, max_lag);

        if (result.times.empty()) {
            result.times.reserve(estimate.size());
            for (const auto& [t, c] : estimate) result.times.push_back(t);
            sum.assign(estimate.size(), 0.0);
            sum_squares.assign(estimate.size(), 0.0);
        }
        for (std::size_t k = 0; k < estimate.size(); ++k) {
            sum[k] += estimate[k].second;
            sum_squares[k] += estimate[k].second * estimate[k].second;
        }

        // Raw second moment; the generated fluctuation has zero mean by
        // construction, so this is an unbiased per-sample variance.
        double second_moment = 0.0;
        for (const double u : trajectory.samples) second_moment += u * u;
        second_moment /= static_cast<double>(trajectory.samples.size());
        variance_sum += second_moment;
        variance_sum_squares += second_moment * second_moment;
    }

    const auto n = static_cast<double>(spec.n_samples);
    result.mean.resize(sum.size());
    result.standard_error.resize(sum.size());
    for (std::size_t k = 0; k < sum.size(); ++k) {
        result.mean[k] = sum[k] / n;
        double spread = 0.0;
        if (spec.n_samples > 1) {
            spread = (sum_squares[k] - sum[k] * sum[k] / n) / (n - 1.0);
            spread = std::max(spread, 0.0);
        }
        result.standard_error[k] = std::sqrt(spread / n);
    }
    result.variance = variance_sum / n;
    double variance_spread = 0.0;
    if (spec.n_samples > 1) {
        variance_spread = (variance_sum_squares - variance_sum * variance_sum / n) / (n - 1.0);
        variance_spread = std::max(variance_spread, 0.0);
    }
    result.variance_standard_error = std::sqrt(variance_spread / n);
    return result;
}

} // namespace decosolv::oracle
