// bath.hpp — Harmonic bath: discrete modes, spectral densities and the
// thermal wavepacket width prescriptions.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace decosolv::bath {

// One harmonic bath degree of freedom.  The per-mode reorganization energy
// lambda absorbs the mass, coupling constant and displacement; every
// formula in the library uses only mass-cancelling combinations of them.
struct BathMode {
    double omega{0.0};   // rad/fs, > 0
    double lambda{0.0};  // eV, >= 0
};

// Throws std::domain_error if the list is empty, an omega is non-positive
// or a lambda is negative.
void validate_modes(std::span<const BathMode> modes);

// Sum of per-mode reorganization energies (eV).
double total_reorganization(std::span<const BathMode> modes);

// Thermal width prescriptions for the Gaussian bath wavepacket.  All three
// are expressed through the dimensionless factor W in a = (m*omega/hbar)*W:
//
//   TanhHarmonic:    W = tanh(x),              x = hbar*omega / (2 kB T)
//   NitzanA:         W = 1 / (coth(x) - 1/x)
//   HighTemperature: W = 3/x   (frequency-independent width a = 6 m kB T / hbar^2)
//
// TanhHarmonic and NitzanA approach the coherent-state value W = 1 as
// T -> 0 at fixed omega; NitzanA approaches 3/x at high temperature.
enum class WidthModel {
    TanhHarmonic,
    NitzanA,
    HighTemperature,
};

// Returns W > 0.  omega must be positive; temperature must be positive
// except for NitzanA, which admits T = 0 with the limit value 1.
double width_factor(double omega, double temperature, WidthModel model);

// Coupling-weighted spectral density J_eff(omega) in eV, defined so that
// the total reorganization energy is lambda = (1/pi) * Int J_eff(w)/w dw.
class SpectralDensity {
  public:
    enum class Kind { OhmicExponential, Debye, Tabulated };

    // J_eff(w) = eta * w * exp(-w/omega_c); lambda = eta*omega_c/pi.
    static SpectralDensity ohmic_exponential(double eta_ev_fs, double omega_c);

    // J_eff(w) = 2*lambda_total*w*omega_debye/(w^2 + omega_debye^2);
    // normalized so the full reorganization energy equals lambda_total.
    static SpectralDensity debye(double lambda_total_ev, double omega_debye);

    // Piecewise-linear table, zero outside; omegas strictly increasing.
    static SpectralDensity tabulated(std::vector<double> omegas, std::vector<double> values);

    // Two-column text file: omega in cm^-1, J_eff in eV.
    static SpectralDensity from_table_file(const std::filesystem::path& path);

    // J_eff(omega); zero for omega <= 0 and outside a table's support.
    double operator()(double omega) const;

    // Reorganization energy over the full support / below a cutoff (eV).
    double reorganization_energy() const;
    double reorganization_energy_below(double omega_max) const;

    // Default integration / discretization cutoff: 50x the characteristic
    // frequency for the analytic forms, the table end for tabulated data.
    double default_omega_max() const;
    double characteristic_frequency() const;

    Kind kind() const noexcept { return kind_; }
    std::string describe() const;

  private:
    SpectralDensity() = default;

    Kind kind_{Kind::OhmicExponential};
    double eta_{0.0};
    double omega_c_{0.0};
    double lambda_total_{0.0};
    double omega_debye_{0.0};
    std::vector<double> table_omega_;
    std::vector<double> table_value_;
};

// Result of projecting a continuous density onto a uniform mode grid.
// tail_warning is set when more than 1% of the total reorganization
// energy lies beyond omega_max.
struct DiscretizedBath {
    std::vector<BathMode> modes;
    double reorganization_total{0.0};  // sum of the discrete lambdas, eV
    double tail_fraction{0.0};
    bool tail_warning{false};
};

inline constexpr double discretization_tail_threshold = 0.01;

// Midpoint grid w_k = (k - 1/2) * dW, dW = omega_max/n_modes, with
// lambda_k = J_eff(w_k)/(pi w_k) * dW.
DiscretizedBath discretize(const SpectralDensity& density, std::size_t n_modes, double omega_max);

} // namespace decosolv::bath
