// solvation.hpp — Short-time solvent response: the analytic Gaussian
// exponent, the fluctuation-dissipation bridge between Stokes shift and
// gap variance, and estimation of C(t) / tau_g from sampled gap
// trajectories.

#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decosolv/bath.hpp"

namespace decosolv::solvation {

// Equilibrium energy-gap statistics at a temperature.  In linear response
// the variance and the reorganization energy are tied by
// <dU^2> = 2 lambda kB T.
struct GapStatistics {
    double mean_gap{0.0};      // eV
    double variance{0.0};      // eV^2
    double lambda_reorg{0.0};  // eV
    double temperature{0.0};   // K

    static GapStatistics linear_response(double mean_gap, double lambda_reorg, double temperature);
    static GapStatistics from_rms(double mean_gap, double rms_fluctuation, double temperature);
    static GapStatistics from_stokes(double mean_gap, double stokes_shift, double temperature);
};

// Uniformly sampled gap trajectory U(t_i), t_i = i * dt.
struct GapTrajectory {
    double dt{0.0};               // fs
    std::vector<double> samples;  // eV

    // Two-column text (t in fs, U in eV); spacing must be uniform to
    // 1e-9 relative.
    static GapTrajectory from_file(const std::filesystem::path& path);
    void to_file(const std::filesystem::path& path) const;

    double duration() const { return samples.empty() ? 0.0 : dt * static_cast<double>(samples.size() - 1); }
};

using ResponseCurve = std::vector<std::pair<double, double>>;  // (t, C(t))

class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Exponent alpha_C of the short-time solvent response C(t) = exp(-alpha_C t^2):
//
//   alpha_C = kB T * sum_n lambda_n omega_n^2 / <dU^2>
//
// With the linear-response variance 2 kB T sum lambda the temperature
// cancels and tau_g = sqrt(sum lambda / sum lambda omega^2).
double solvation_exponent(std::span<const bath::BathMode> modes, double gap_variance,
                          double temperature);

// <dU^2> = stokes_shift * kB T (lambda = stokes_shift / 2), and its inverse.
double variance_from_stokes(double stokes_shift, double temperature);
double stokes_from_variance(double variance, double temperature);

// Normalized equilibrium autocorrelation of the mean-subtracted gap,
// unbiased (divisor N - k), on the lag grid 0, dt, 2 dt, ..., max_lag.
// Requires max_lag <= (N-1) dt / 2 and a non-constant trajectory.
ResponseCurve estimate_response(const GapTrajectory& trajectory, double max_lag);

// Least-squares fit of ln C(t) = -t^2/(2 tau^2) over the leading run of
// points with C >= threshold; needs at least four usable points.
double fit_gaussian_timescale(const ResponseCurve& curve, double threshold = 0.6);

} // namespace decosolv::solvation
