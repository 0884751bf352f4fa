#include "decosolv/bath.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "decosolv/io.hpp"
#include "decosolv/numeric.hpp"
#include "decosolv/units.hpp"

namespace decosolv::bath {

namespace {
constexpr double pi = std::numbers::pi;
}

void validate_modes(std::span<const BathMode> modes) {
    if (modes.empty()) throw std::domain_error("mode list must not be empty");
    for (const auto& mode : modes) {
        if (!(mode.omega > 0.0)) throw std::domain_error("mode frequency must be positive");
        if (mode.lambda < 0.0) throw std::domain_error("mode reorganization energy must be non-negative");
    }
}

double total_reorganization(std::span<const BathMode> modes) {
    validate_modes(modes);
    double sum = 0.0;
    for (const auto& mode : modes) sum += mode.lambda;
    return sum;
}

double width_factor(double omega, double temperature, WidthModel model) {
    if (!(omega > 0.0)) throw std::domain_error("frequency must be positive");
    if (model == WidthModel::NitzanA) {
        if (temperature < 0.0) throw std::domain_error("temperature must be non-negative");
        if (temperature == 0.0) return 1.0;  // coherent-state limit
    } else if (!(temperature > 0.0)) {
        throw std::domain_error("temperature must be positive");
    }
    const double x = units::hbar * omega / (2.0 * units::k_boltzmann * temperature);
    switch (model) {
        case WidthModel::TanhHarmonic: return std::tanh(x);
        case WidthModel::NitzanA: return 1.0 / numeric::coth_minus_inverse(x);
        case WidthModel::HighTemperature: return 3.0 / x;
    }
    throw std::invalid_argument("unknown width model");
}

SpectralDensity SpectralDensity::ohmic_exponential(double eta_ev_fs, double omega_c) {
    if (!(eta_ev_fs >= 0.0)) throw std::domain_error("ohmic coupling eta must be non-negative");
    if (!(omega_c > 0.0)) throw std::domain_error("cutoff frequency must be positive");
    SpectralDensity sd;
    sd.kind_ = Kind::OhmicExponential;
    sd.eta_ = eta_ev_fs;
    sd.omega_c_ = omega_c;
    return sd;
}

SpectralDensity SpectralDensity::debye(double lambda_total_ev, double omega_debye) {
    if (!(lambda_total_ev >= 0.0)) throw std::domain_error("reorganization energy must be non-negative");
    if (!(omega_debye > 0.0)) throw std::domain_error("Debye frequency must be positive");
    SpectralDensity sd;
    sd.kind_ = Kind::Debye;
    sd.lambda_total_ = lambda_total_ev;
    sd.omega_debye_ = omega_debye;
    return sd;
}

SpectralDensity SpectralDensity::tabulated(std::vector<double> omegas, std::vector<double> values) {
    if (omegas.size() != values.size()) throw std::invalid_argument("table columns differ in length");
    if (omegas.size() < 2) throw std::invalid_argument("table needs at least two points");
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (omegas[i] < 0.0) throw std::domain_error("table frequencies must be non-negative");
        if (i > 0 && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("table frequencies must be strictly increasing");
        if (values[i] < 0.0) throw std::domain_error("spectral density must be non-negative");
    }
    // J_eff(0) = 0 keeps Int J/w dw finite at the origin.
    if (omegas.front() == 0.0 && values.front() != 0.0)
        throw std::domain_error("tabulated spectral density must vanish at omega = 0");
    SpectralDensity sd;
    sd.kind_ = Kind::Tabulated;
    sd.table_omega_ = std::move(omegas);
    sd.table_value_ = std::move(values);
    return sd;
}

SpectralDensity SpectralDensity::from_table_file(const std::filesystem::path& path) {
    const auto rows = io::read_two_column(path);
    std::vector<double> omegas;
    std::vector<double> values;
    omegas.reserve(rows.size());
    values.reserve(rows.size());
    for (const auto& [wavenumber, value] : rows) {
        omegas.push_back(units::to_angular_frequency({wavenumber, units::Unit::Wavenumber}));
        values.push_back(value);
    }
    return tabulated(std::move(omegas), std::move(values));
}

double SpectralDensity::operator()(double omega) const {
    if (omega <= 0.0) return 0.0;
    switch (kind_) {
        case Kind::OhmicExponential:
            return eta_ * omega * std::exp(-omega / omega_c_);
        case Kind::Debye:
            return 2.0 * lambda_total_ * omega * omega_debye_ / (omega * omega + omega_debye_ * omega_debye_);
        case Kind::Tabulated: {
            if (omega < table_omega_.front() || omega > table_omega_.back()) return 0.0;
            const auto upper = std::upper_bound(table_omega_.begin(), table_omega_.end(), omega);
            const std::size_t hi = std::min<std::size_t>(
                static_cast<std::size_t>(upper - table_omega_.begin()), table_omega_.size() - 1);
            const std::size_t lo = hi - 1;
            const double t = (omega - table_omega_[lo]) / (table_omega_[hi] - table_omega_[lo]);
            return table_value_[lo] + t * (table_value_[hi] - table_value_[lo]);
        }
    }
    return 0.0;
}

double SpectralDensity::reorganization_energy() const {
    switch (kind_) {
        case Kind::OhmicExponential: return eta_ * omega_c_ / pi;
        case Kind::Debye: return lambda_total_;
        case Kind::Tabulated: return reorganization_energy_below(table_omega_.back());
    }
    return 0.0;
}

double SpectralDensity::reorganization_energy_below(double omega_max) const {
    if (!(omega_max > 0.0)) return 0.0;
    switch (kind_) {
        case Kind::OhmicExponential:
            return eta_ * omega_c_ / pi * (1.0 - std::exp(-omega_max / omega_c_));
        case Kind::Debye:
            return lambda_total_ * (2.0 / pi) * std::atan(omega_max / omega_debye_);
        case Kind::Tabulated: {
            // Exact integral of the piecewise-linear table: on a segment
            // J = a + b*w, Int J/w dw = a*ln(w2/w1) + b*(w2 - w1).
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < table_omega_.size(); ++i) {
                double w1 = table_omega_[i];
                double w2 = table_omega_[i + 1];
                if (w1 >= omega_max) break;
                double j1 = table_value_[i];
                double j2 = table_value_[i + 1];
                const double slope = (j2 - j1) / (w2 - w1);
                if (w2 > omega_max) {
                    j2 = j1 + slope * (omega_max - w1);
                    w2 = omega_max;
                }
                const double intercept = j1 - slope * w1;
                if (w1 == 0.0) {
                    sum += slope * w2;  // J(0) = 0, so the intercept vanishes
                } else {
                    sum += intercept * std::log(w2 / w1) + slope * (w2 - w1);
                }
            }
            return sum / pi;
        }
    }
    return 0.0;
}

double SpectralDensity::characteristic_frequency() const {
    switch (kind_) {
        case Kind::OhmicExponential: return omega_c_;
        case Kind::Debye: return omega_debye_;
        case Kind::Tabulated: return table_omega_.back();
    }
    return 0.0;
}

double SpectralDensity::default_omega_max() const {
    if (kind_ == Kind::Tabulated) return table_omega_.back();
    return 50.0 * characteristic_frequency();
}

std::string SpectralDensity::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::OhmicExponential:
            out << "ohmic eta=" << eta_ << "eVfs omega_c=" << omega_c_ << "rad/fs";
            break;
        case Kind::Debye:
            out << "debye lambda=" << lambda_total_ << "eV omega_d=" << omega_debye_ << "rad/fs";
            break;
        case Kind::Tabulated:
            out << "tabulated points=" << table_omega_.size()
                << " omega_max=" << table_omega_.back() << "rad/fs";
            break;
    }
    return out.str();
}

DiscretizedBath discretize(const SpectralDensity& density, std::size_t n_modes, double omega_max) {
    if (n_modes < 1) throw std::domain_error("need at least one mode");
    if (!(omega_max > 0.0)) throw std::domain_error("omega_max must be positive");

    const double delta = omega_max / static_cast<double>(n_modes);
    DiscretizedBath result;
    result.modes.reserve(n_modes);
    for (std::size_t k = 1; k <= n_modes; ++k) {
        const double omega = (static_cast<double>(k) - 0.5) * delta;
        const double lambda = density(omega) / (pi * omega) * delta;
        result.modes.push_back({omega, lambda});
        result.reorganization_total += lambda;
    }

    const double total = density.reorganization_energy();
    if (total > 0.0) {
        result.tail_fraction =
            std::max(0.0, 1.0 - density.reorganization_energy_below(omega_max) / total);
    }
    result.tail_warning = result.tail_fraction > discretization_tail_threshold;
    return result;
}

} // namespace decosolv::bath
