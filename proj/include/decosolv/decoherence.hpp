// decoherence.hpp — Decoherence curves and timescales for harmonic baths:
// the Gaussian-wavepacket short-time form and the golden-rule spin-boson
// decay, evaluated from discrete modes or by quadrature over a continuous
// spectral density.

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "decosolv/bath.hpp"

namespace decosolv::decoherence {

// exp(-alpha t^2) with the timescale convention exp(-t^2 / (2 tau^2)),
// i.e. tau = 1/sqrt(2 alpha).  Ratios of two such timescales are
// convention-independent as long as both sides use the same one.
struct GaussianCurve {
    double alpha{0.0};  // fs^-2
    double tau{0.0};    // fs

    static GaussianCurve from_alpha(double alpha);
    static GaussianCurve from_tau(double tau);
    double operator()(double t) const;
};

enum class CurveKind { Gaussian, GoldenRule };

// Sampled decay curve; values lie in (0, 1] with value 1 at t = 0.
struct DecoherenceCurve {
    std::vector<double> times;   // fs
    std::vector<double> values;
    CurveKind kind{CurveKind::Gaussian};
};

struct QuadratureOptions {
    double relative_tolerance{1e-8};
    double omega_max{0.0};   // 0 -> density.default_omega_max()
    unsigned max_depth{15};
};

// Raised when adaptive quadrature cannot reach the requested tolerance.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(double achieved, double requested);
    double achieved_tolerance;
    double requested_tolerance;
};

// Exponent coefficient alpha_D of the Gaussian decoherence function
// D(t) = exp(-alpha_D t^2):
//
//   alpha_D = sum_n lambda_n * omega_n / (2 hbar W_n(omega_n, T))
//
// with W the chosen thermal width factor.  Zero total coupling gives 0.
double gaussian_decoherence_exponent(std::span<const bath::BathMode> modes,
                                     double temperature, bath::WidthModel model);

// tau_D = 1/sqrt(2 alpha_D); alpha_D must be positive.
double decoherence_time(double alpha_decoherence);

// Full golden-rule exponent E(t) >= 0 with D(t) = exp(-E(t)):
//
//   E(t) = sum_n lambda_n (1 - cos omega_n t) coth(hbar omega_n / 2 kB T) / (hbar omega_n)
//
// or the corresponding integral (1/pi hbar) Int J_eff(w) (1 - cos wt)/w^2 coth(...) dw.
// Returning the exponent rather than the curve avoids underflow; the curve
// builders below exponentiate lazily.
double golden_rule_exponent(std::span<const bath::BathMode> modes, double temperature, double time);
double golden_rule_exponent(const bath::SpectralDensity& density, double temperature, double time,
                            const QuadratureOptions& options = {});

DecoherenceCurve golden_rule_curve(std::span<const bath::BathMode> modes, double temperature,
                                   const std::vector<double>& times);
DecoherenceCurve golden_rule_curve(const bath::SpectralDensity& density, double temperature,
                                   const std::vector<double>& times,
                                   const QuadratureOptions& options = {});

DecoherenceCurve gaussian_curve(const GaussianCurve& curve, const std::vector<double>& times);

} // namespace decosolv::decoherence
