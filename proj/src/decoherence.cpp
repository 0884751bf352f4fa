#include "decosolv/decoherence.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "decosolv/numeric.hpp"
#include "decosolv/units.hpp"

namespace decosolv::decoherence {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_temperature(double temperature) {
    if (!(temperature > 0.0)) throw std::domain_error("temperature must be positive");
}

void require_nonnegative_time(double time) {
    if (time < 0.0) throw std::domain_error("time must be non-negative");
}

} // namespace

GaussianCurve GaussianCurve::from_alpha(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("exponent coefficient must be positive");
    return {alpha, 1.0 / std::sqrt(2.0 * alpha)};
}

GaussianCurve GaussianCurve::from_tau(double tau) {
    if (!(tau > 0.0)) throw std::domain_error("timescale must be positive");
    return {1.0 / (2.0 * tau * tau), tau};
}

double GaussianCurve::operator()(double t) const { return std::exp(-alpha * t * t); }

QuadratureError::QuadratureError(double achieved, double requested)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "quadrature did not converge: achieved relative tolerance " << achieved
              << ", requested " << requested;
          return msg.str();
      }()),
      achieved_tolerance(achieved),
      requested_tolerance(requested) {}

double gaussian_decoherence_exponent(std::span<const bath::BathMode> modes,
                                     double temperature, bath::WidthModel model) {
    bath::validate_modes(modes);
    double alpha = 0.0;
    for (const auto& mode : modes) {
        if (mode.lambda == 0.0) continue;
        const double width = bath::width_factor(mode.omega, temperature, model);
        alpha += mode.lambda * mode.omega / (2.0 * units::hbar * width);
    }
    return alpha;
}

double decoherence_time(double alpha_decoherence) {
    if (!(alpha_decoherence > 0.0))
        throw std::domain_error("decoherence exponent must be positive");
    return 1.0 / std::sqrt(2.0 * alpha_decoherence);
}

double golden_rule_exponent(std::span<const bath::BathMode> modes, double temperature, double time) {
    bath::validate_modes(modes);
    require_positive_temperature(temperature);
    require_nonnegative_time(time);
    const double beta_half_hbar = units::hbar / (2.0 * units::k_boltzmann * temperature);
    double exponent = 0.0;
    for (const auto& mode : modes) {
        if (mode.lambda == 0.0) continue;
        exponent += mode.lambda * numeric::one_minus_cos(mode.omega * time) *
                    numeric::coth(beta_half_hbar * mode.omega) / (units::hbar * mode.omega);
    }
    return exponent;
}

double golden_rule_exponent(const bath::SpectralDensity& density, double temperature, double time,
                            const QuadratureOptions& options) {
    require_positive_temperature(temperature);
    require_nonnegative_time(time);
    if (time == 0.0) return 0.0;

    const double omega_max = options.omega_max > 0.0 ? options.omega_max : density.default_omega_max();
    const double beta_half_hbar = units::hbar / (2.0 * units::k_boltzmann * temperature);
    const auto integrand = [&](double omega) {
        if (omega <= 0.0) return 0.0;
        return density(omega) * numeric::one_minus_cos(omega * time) *
               numeric::coth(beta_half_hbar * omega) / (omega * omega);
    };

    double error_estimate = 0.0;
    using integrator = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double integral = integrator::integrate(integrand, 0.0, omega_max, options.max_depth,
                                                  options.relative_tolerance, &error_estimate);
    const double value = integral / (pi * units::hbar);
    if (integral > 0.0) {
        const double achieved = error_estimate / integral;
        if (achieved > options.relative_tolerance) {
            throw QuadratureError(achieved, options.relative_tolerance);
        }
    }
    return value;
}

namespace {

template <typename Exponent>
DecoherenceCurve build_golden_rule(const std::vector<double>& times, Exponent&& exponent_at) {
    DecoherenceCurve curve;
    curve.kind = CurveKind::GoldenRule;
    curve.times = times;
    curve.values.reserve(times.size());
    for (const double t : times) curve.values.push_back(std::exp(-exponent_at(t)));
    return curve;
}

} // namespace

DecoherenceCurve golden_rule_curve(std::span<const bath::BathMode> modes, double temperature,
                                   const std::vector<double>& times) {
    return build_golden_rule(times, [&](double t) { return golden_rule_exponent(modes, temperature, t); });
}

DecoherenceCurve golden_rule_curve(const bath::SpectralDensity& density, double temperature,
                                   const std::vector<double>& times, const QuadratureOptions& options) {
    return build_golden_rule(
        times, [&](double t) { return golden_rule_exponent(density, temperature, t, options); });
}

DecoherenceCurve gaussian_curve(const GaussianCurve& curve, const std::vector<double>& times) {
    DecoherenceCurve result;
    result.kind = CurveKind::Gaussian;
    result.times = times;
    result.values.reserve(times.size());
    for (const double t : times) result.values.push_back(curve(t));
    return result;
}

} // namespace decosolv::decoherence
