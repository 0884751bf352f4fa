// oracle.hpp — Brute-force classical-harmonic-bath Monte Carlo.  Generates
// gap trajectories whose statistics independently validate the analytic
// response function, the linear-response variance and the solvation
// exponent.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "decosolv/bath.hpp"
#include "decosolv/solvation.hpp"

namespace decosolv::oracle {

struct EnsembleSpec {
    std::vector<bath::BathMode> modes;
    double temperature{0.0};   // K
    std::size_t n_samples{1};
    double dt{0.0};            // fs
    std::size_t n_steps{2};    // samples per trajectory
    std::uint64_t seed{0};
};

void validate(const EnsembleSpec& spec);

// Phase-space amplitudes of one oscillator, in units of its thermal
// position width.  Analytic evolution is an exact rotation, so the
// oscillator energy (position^2 + velocity^2) is conserved to rounding.
struct OscillatorState {
    double position{0.0};
    double velocity{0.0};
};

OscillatorState evolve(const OscillatorState& state, double omega, double time);

// One trajectory of the gap fluctuation dU(t) = sum_n sqrt(2 lambda_n kB T)
// * (xi_n cos w_n t + zeta_n sin w_n t), with xi, zeta standard normal
// (classical Boltzmann initial conditions) and analytic propagation.
// Deterministic in (seed, sample_index); concurrent generation of
// different indices is schedule-independent.
solvation::GapTrajectory sample_gap_trajectory(const EnsembleSpec& spec, std::size_t sample_index);
std::vector<solvation::GapTrajectory> sample_gap_trajectories(const EnsembleSpec& spec);

// Closed-form classical response of a harmonic bath:
// C(t) = sum_n lambda_n cos(w_n t) / sum_n lambda_n.
solvation::ResponseCurve analytic_classical_response(std::span<const bath::BathMode> modes,
                                                     const std::vector<double>& times);

// Per-sample response estimates aggregated over the ensemble, with
// standard errors across samples, plus the sampled gap variance.
struct EnsembleResponse {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> standard_error;
    double variance{0.0};
    double variance_standard_error{0.0};
    std::size_t n_samples{0};
};

EnsembleResponse ensemble_response(const EnsembleSpec& spec, double max_lag);

} // namespace decosolv::oracle
