// units.hpp — Physical constants, unit-tagged quantities and conversions.
//
// Internal unit system used throughout the library: energies in eV, times
// in fs, angular frequencies in rad/fs, temperatures in K.  Masses and
// lengths never appear independently (they cancel in the (omega, lambda)
// bath parameterization), so no mass or length unit is defined.

#pragma once

#include <numbers>
#include <string>
#include <string_view>

namespace decosolv::units {

// CODATA 2018 values, hard-coded for reproducibility.
inline constexpr double k_boltzmann = 8.617333262e-5;       // eV/K
inline constexpr double hbar = 0.6582119569;                // eV*fs
inline constexpr double speed_of_light = 299.792458;        // nm/fs
inline constexpr double hc_ev_nm = 2.0 * std::numbers::pi * hbar * speed_of_light;
inline constexpr double hc_ev_cm = hc_ev_nm * 1e-7;         // eV*cm

enum class Dimension {
    Energy,
    Time,
    AngularFrequency,
    Temperature,
    Dimensionless,
};

// External units accepted on input/output.  PhotonNanometer is an energy
// expressed through E = hc/lambda (reciprocal, not a linear scale).
enum class Unit {
    ElectronVolt,
    Wavenumber,       // cm^-1
    PhotonNanometer,  // nm
    RadPerFs,
    Femtosecond,
    Picosecond,
    Kelvin,
    Scalar,
};

Dimension dimension_of(Unit unit) noexcept;
std::string_view unit_symbol(Unit unit) noexcept;

// A value tagged with the unit it is expressed in.
struct Quantity {
    double value{0.0};
    Unit unit{Unit::Scalar};
};

// Energy, wavenumber, photon wavelength and angular frequency form one
// convertibility group (bridged by hbar and hc); time and temperature do
// not mix with anything else.
bool convertible(Unit from, Unit to) noexcept;

// Re-express q in the target unit.  Throws std::invalid_argument on
// incompatible units, std::domain_error when the conversion is undefined
// (e.g. 0 eV expressed as a photon wavelength).
Quantity convert(const Quantity& q, Unit target);

// Convenience accessors in the internal unit system.  Each accepts any
// convertible unit.
double to_energy_ev(const Quantity& q);
double to_angular_frequency(const Quantity& q);  // rad/fs
double to_time_fs(const Quantity& q);
double to_temperature_kelvin(const Quantity& q);

// k_B * T in eV.  T must be positive.
double thermal_energy(double temperature_kelvin);

// Parses a suffixed numeric token such as "10.6fs", "0.21eV", "298K",
// "1500cm-1", "1.5rad/fs", "450nm", "2ps".  Bare numbers are rejected;
// unit confusion is the domain's most common input error.
Quantity parse_quantity(std::string_view text);

} // namespace decosolv::units
