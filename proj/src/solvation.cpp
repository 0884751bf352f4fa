#include "decosolv/solvation.hpp"

#include <cmath>
#include <fstream>

#include "decosolv/io.hpp"
#include "decosolv/units.hpp"

namespace decosolv::solvation {

namespace {

void validate_statistics_inputs(double temperature) {
    if (!(temperature > 0.0)) throw std::domain_error("temperature must be positive");
}

} // namespace

GapStatistics GapStatistics::linear_response(double mean_gap, double lambda_reorg, double temperature) {
    validate_statistics_inputs(temperature);
    if (lambda_reorg < 0.0) throw std::domain_error("reorganization energy must be non-negative");
    return {mean_gap, 2.0 * lambda_reorg * units::thermal_energy(temperature), lambda_reorg, temperature};
}

GapStatistics GapStatistics::from_rms(double mean_gap, double rms_fluctuation, double temperature) {
    validate_statistics_inputs(temperature);
    if (rms_fluctuation < 0.0) throw std::domain_error("rms fluctuation must be non-negative");
    const double variance = rms_fluctuation * rms_fluctuation;
    const double lambda = variance / (2.0 * units::thermal_energy(temperature));
    return {mean_gap, variance, lambda, temperature};
}

GapStatistics GapStatistics::from_stokes(double mean_gap, double stokes_shift, double temperature) {
    validate_statistics_inputs(temperature);
    if (stokes_shift < 0.0) throw std::domain_error("Stokes shift must be non-negative");
    return {mean_gap, variance_from_stokes(stokes_shift, temperature), stokes_shift / 2.0, temperature};
}

GapTrajectory GapTrajectory::from_file(const std::filesystem::path& path) {
    const auto rows = io::read_two_column(path);
    if (rows.size() < 2) throw std::runtime_error("trajectory needs at least two samples");
    const double dt = rows[1].first - rows[0].first;
    if (!(dt > 0.0)) throw std::runtime_error("trajectory times must be increasing");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double step = rows[i].first - rows[i - 1].first;
        if (std::abs(step - dt) > 1e-9 * dt) {
            throw std::runtime_error("trajectory spacing is not uniform at sample " + std::to_string(i));
        }
    }
    GapTrajectory trajectory;
    trajectory.dt = dt;
    trajectory.samples.reserve(rows.size());
    for (const auto& [t, gap] : rows) trajectory.samples.push_back(gap);
    return trajectory;
}

void GapTrajectory::to_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "# t_fs U_eV\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << io::format_double(dt * static_cast<double>(i)) << ' '
            << io::format_double(samples[i]) << '\n';
    }
}

double solvation_exponent(std::span<const bath::BathMode> modes, double gap_variance,
                          double temperature) {
    bath::validate_modes(modes);
    if (!(gap_variance > 0.0)) throw std::domain_error("gap variance must be positive");
    const double thermal = units::thermal_energy(temperature);
    double weighted = 0.0;
    for (const auto& mode : modes) weighted += mode.lambda * mode.omega * mode.omega;
    return thermal * weighted / gap_variance;
}

double variance_from_stokes(double stokes_shift, double temperature) {
    if (stokes_shift < 0.0) throw std::domain_error("Stokes shift must be non-negative");
    return stokes_shift * units::thermal_energy(temperature);
}

double stokes_from_variance(double variance, double temperature) {
    if (variance < 0.0) throw std::domain_error("variance must be non-negative");
    return variance / units::thermal_energy(temperature);
}

ResponseCurve estimate_response(const GapTrajectory& trajectory, double max_lag) {
    const auto& samples = trajectory.samples;
    const std::size_t n = samples.size();
    if (n < 2) throw std::domain_error("trajectory needs at least two samples");
    if (!(trajectory.dt > 0.0)) throw std::domain_error("trajectory dt must be positive");
    if (max_lag < 0.0) throw std::domain_error("max lag must be non-negative");

    const auto max_lag_index = static_cast<std::size_t>(std::floor(max_lag / trajectory.dt + 1e-9));
    if (max_lag_index > (n - 1) / 2) {
        throw std::domain_error("max lag exceeds half the trajectory length");
    }

    double mean = 0.0;
    for (const double u : samples) mean += u;
    mean /= static_cast<double>(n);

    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = samples[i] - mean;

    double lag0 = 0.0;
    for (const double d : centered) lag0 += d * d;
    lag0 /= static_cast<double>(n);
    if (lag0 <= 0.0) throw std::domain_error("trajectory is constant; autocorrelation undefined");

    ResponseCurve curve;
    curve.reserve(max_lag_index + 1);
    curve.emplace_back(0.0, 1.0);
    for (std::size_t k = 1; k <= max_lag_index; ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) acc += centered[i] * centered[i + k];
        acc /= static_cast<double>(n - k);
        curve.emplace_back(trajectory.dt * static_cast<double>(k), acc / lag0);
    }
    return curve;
}

double fit_gaussian_timescale(const ResponseCurve& curve, double threshold) {
    if (curve.empty()) throw FitError("empty response curve");
    if (std::abs(curve.front().first) > 1e-9 || std::abs(curve.front().second - 1.0) > 1e-3) {
        throw FitError("response curve must start at (0, 1)");
    }

    // Leading contiguous window with C >= threshold; later recurrences
    // above the threshold are not part of the short-time fit.
    double sum_t4 = 0.0;
    double sum_t2_logc = 0.0;
    std::size_t used = 0;
    for (const auto& [t, c] : curve) {
        if (c < threshold) break;
        if (c <= 0.0) throw FitError("non-positive response value in fit window");
        const double t2 = t * t;
        sum_t4 += t2 * t2;
        sum_t2_logc += t2 * std::log(c);
        ++used;
    }
    if (used < 4) {
        throw FitError("need at least four points with C >= threshold; got " + std::to_string(used));
    }
    const double slope = -sum_t2_logc / sum_t4;  // ln C = -slope * t^2
    if (!(slope > 0.0)) throw FitError("response curve does not decay in the fit window");
    return 1.0 / std::sqrt(2.0 * slope);
}

} // namespace decosolv::solvation
