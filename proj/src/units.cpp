#include "decosolv/units.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace decosolv::units {

namespace {

struct UnitInfo {
    Unit unit;
    std::string_view symbol;
    Dimension dimension;
};

// Longest symbols first so suffix matching is unambiguous ("fs" vs "rad/fs").
constexpr std::array<UnitInfo, 8> unit_table{{
    {Unit::RadPerFs, "rad/fs", Dimension::AngularFrequency},
    {Unit::Wavenumber, "cm-1", Dimension::Energy},
    {Unit::ElectronVolt, "eV", Dimension::Energy},
    {Unit::PhotonNanometer, "nm", Dimension::Energy},
    {Unit::Femtosecond, "fs", Dimension::Time},
    {Unit::Picosecond, "ps", Dimension::Time},
    {Unit::Kelvin, "K", Dimension::Temperature},
    {Unit::Scalar, "", Dimension::Dimensionless},
}};

const UnitInfo& info(Unit unit) noexcept {
    for (const auto& entry : unit_table) {
        if (entry.unit == unit) return entry;
    }
    return unit_table.back();
}

// Value of q expressed in the canonical unit of its group: eV for the
// energy group, fs for time, K for temperature.
double canonical_value(const Quantity& q) {
    switch (q.unit) {
        case Unit::ElectronVolt: return q.value;
        case Unit::Wavenumber: return hc_ev_cm * q.value;
        case Unit::PhotonNanometer:
            if (q.value <= 0.0) throw std::domain_error("photon wavelength must be positive");
            return hc_ev_nm / q.value;
        case Unit::RadPerFs: return hbar * q.value;
        case Unit::Femtosecond: return q.value;
        case Unit::Picosecond: return 1e3 * q.value;
        case Unit::Kelvin: return q.value;
        case Unit::Scalar: return q.value;
    }
    throw std::invalid_argument("unknown unit");
}

double from_canonical(double canonical, Unit target) {
    switch (target) {
        case Unit::ElectronVolt: return canonical;
        case Unit::Wavenumber: return canonical / hc_ev_cm;
        case Unit::PhotonNanometer:
            if (canonical <= 0.0) throw std::domain_error("only positive energies have a photon wavelength");
            return hc_ev_nm / canonical;
        case Unit::RadPerFs: return canonical / hbar;
        case Unit::Femtosecond: return canonical;
        case Unit::Picosecond: return 1e-3 * canonical;
        case Unit::Kelvin: return canonical;
        case Unit::Scalar: return canonical;
    }
    throw std::invalid_argument("unknown unit");
}

} // namespace

Dimension dimension_of(Unit unit) noexcept { return info(unit).dimension; }

std::string_view unit_symbol(Unit unit) noexcept { return info(unit).symbol; }

bool convertible(Unit from, Unit to) noexcept {
    const Dimension a = dimension_of(from);
    const Dimension b = dimension_of(to);
    if (a == b) return true;
    auto spectroscopic = [](Dimension d) {
        return d == Dimension::Energy || d == Dimension::AngularFrequency;
    };
    return spectroscopic(a) && spectroscopic(b);
}

Quantity convert(const Quantity& q, Unit target) {
    if (!convertible(q.unit, target)) {
        throw std::invalid_argument(std::string("cannot convert ") +
                                    std::string(unit_symbol(q.unit)) + " to " +
                                    std::string(unit_symbol(target)));
    }
    if (q.unit == target) return q;
    return Quantity{from_canonical(canonical_value(q), target), target};
}

double to_energy_ev(const Quantity& q) { return convert(q, Unit::ElectronVolt).value; }

double to_angular_frequency(const Quantity& q) { return convert(q, Unit::RadPerFs).value; }

double to_time_fs(const Quantity& q) { return convert(q, Unit::Femtosecond).value; }

double to_temperature_kelvin(const Quantity& q) { return convert(q, Unit::Kelvin).value; }

double thermal_energy(double temperature_kelvin) {
    if (temperature_kelvin <= 0.0) throw std::domain_error("temperature must be positive");
    return k_boltzmann * temperature_kelvin;
}

Quantity parse_quantity(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty quantity");
    const std::string buffer(text);
    const char* begin = buffer.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw std::invalid_argument("no numeric value in '" + buffer + "'");
    const std::string_view suffix = text.substr(static_cast<std::size_t>(end - begin));
    if (suffix.empty()) {
        throw std::invalid_argument("missing unit suffix in '" + buffer +
                                    "' (write e.g. 10.6fs, 0.21eV, 298K, 1500cm-1)");
    }
    for (const auto& entry : unit_table) {
        if (!entry.symbol.empty() && suffix == entry.symbol) return Quantity{value, entry.unit};
    }
    throw std::invalid_argument("unknown unit suffix '" + std::string(suffix) + "'");
}

} // namespace decosolv::units
