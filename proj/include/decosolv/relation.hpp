// relation.hpp — Proportionality between the decoherence and short-time
// solvation timescales: the general width-model ratio, its
// high-temperature closed form, and the experimental case-study
// evaluator.

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "decosolv/bath.hpp"
#include "decosolv/solvation.hpp"

namespace decosolv::relation {

struct RmsFluctuation {
    double value{0.0};  // eV
};

struct StokesShift {
    double value{0.0};  // eV
};

using GapSpec = std::variant<RmsFluctuation, StokesShift>;

// Experimental bundle: a Gaussian solvation timescale plus one way of
// specifying the gap fluctuation strength.
struct CaseStudyInput {
    std::string label;
    double tau_g{0.0};        // fs
    double temperature{0.0};  // K
    GapSpec gap_spec{RmsFluctuation{}};
};

enum class RatioPathway { General, HighTemperature };

struct RelationResult {
    double ratio_squared{0.0};     // (tau_D / tau_g)^2
    double tau_decoherence{0.0};   // fs
    RatioPathway pathway{RatioPathway::HighTemperature};
};

// (tau_D/tau_g)^2 = alpha_C / alpha_D, computed from the solvation and
// decoherence modules (definitional identity, not a separate formula).
double ratio_squared_general(std::span<const bath::BathMode> modes, double gap_variance,
                             double temperature, bath::WidthModel model);

// Frequency-independent high-temperature collapse:
// (tau_D/tau_g)^2 = 12 (kB T)^2 / <dU^2> = 6 kB T / lambda.
double ratio_squared_high_temperature(double gap_variance, double temperature);

// Stokes shift in eV from absorption/emission band maxima in nm.  A bare
// wavelength difference does not determine an energy; both maxima are
// required.
double stokes_shift_from_wavelengths(double absorption_nm, double emission_nm);

// Resolves the gap spec to full statistics (mean gap recorded as 0 when
// the input does not carry one).
solvation::GapStatistics resolve_gap_statistics(const CaseStudyInput& input);

// High-temperature pathway applied to an experimental bundle;
// tau_D = sqrt(ratio_squared) * tau_g.
RelationResult evaluate_case_study(const CaseStudyInput& input);

// Batch file: one record per line,
//   label tau_g temperature gap
// where gap is rms=<energy>, stokes=<energy> or stokes=<abs>nm:<em>nm and
// every value carries a unit suffix (10.6fs, 298K, 0.21eV, ...).
CaseStudyInput parse_case_study_record(const std::string& line);
std::vector<CaseStudyInput> parse_case_study_file(const std::filesystem::path& path);

// Bundled experimental reference cases with published decoherence times.
// Non-normative entries depend on a documented identification of the gap
// fluctuation (see `note`) rather than on reported statistics alone.
struct ReferenceCaseStudy {
    CaseStudyInput input;
    double reported_tau_decoherence{0.0};  // fs
    double tolerance_fraction{0.0};        // acceptance band vs the report
    bool normative{true};
    std::string note;
};

const std::vector<ReferenceCaseStudy>& reference_case_studies();

} // namespace decosolv::relation
