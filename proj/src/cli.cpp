#include "decosolv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "decosolv/bath.hpp"
#include "decosolv/decoherence.hpp"
#include "decosolv/io.hpp"
#include "decosolv/oracle.hpp"
#include "decosolv/relation.hpp"
#include "decosolv/solvation.hpp"
#include "decosolv/units.hpp"
#include "decosolv/version.hpp"

namespace decosolv::cli {

namespace {

// ---------------------------------------------------------------- flags --

double time_fs(const std::string& token) { return units::to_time_fs(units::parse_quantity(token)); }

double temperature_k(const std::string& token) {
    return units::to_temperature_kelvin(units::parse_quantity(token));
}

double energy_ev(const std::string& token) { return units::to_energy_ev(units::parse_quantity(token)); }

double angular_frequency(const std::string& token) {
    return units::to_angular_frequency(units::parse_quantity(token));
}

// Ohmic coupling strength carries eV*fs; parsed separately because it is
// the one quantity outside the unit table.
double eta_ev_fs(const std::string& token) {
    const std::string suffix = "eVfs";
    if (token.size() <= suffix.size() || token.substr(token.size() - suffix.size()) != suffix) {
        throw std::invalid_argument("eta needs the eVfs suffix, e.g. 0.3eVfs");
    }
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size() - suffix.size()) {
        throw std::invalid_argument("malformed eta '" + token + "'");
    }
    return value;
}

bath::BathMode parse_mode(const std::string& token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("mode must be <omega>:<lambda>, e.g. 1.2rad/fs:0.05eV");
    }
    return {angular_frequency(token.substr(0, colon)), energy_ev(token.substr(colon + 1))};
}

// ---------------------------------------------------------------- output --

void key_value(std::ostream& out, std::string_view key, double value) {
    out << key << '=' << io::format_double(value) << '\n';
}

void key_value(std::ostream& out, std::string_view key, std::string_view value) {
    out << key << '=' << value << '\n';
}

std::string round3(double value) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << value;
    return s.str();
}

std::string config_header(std::string_view command, std::string_view detail) {
    std::ostringstream s;
    s << "decosolv v" << version << ' ' << command;
    if (!detail.empty()) s << ' ' << detail;
    return s.str();
}

std::vector<double> time_grid(double t_max, std::size_t n_points) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t-max must be positive");
    if (n_points < 2) throw std::invalid_argument("need at least two grid points");
    std::vector<double> times(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        times[i] = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    }
    return times;
}

// ---------------------------------------------------------------- relate --

struct RelateOptions {
    std::string tau_g;
    std::string temperature{"298K"};
    std::string rms;
    std::string stokes;
    std::string batch_file;
    bool temperature_given{false};
};

relation::GapSpec parse_stokes_flag(const std::string& token) {
    const auto colon = token.find(':');
    if (colon != std::string::npos) {
        const auto absorption = units::parse_quantity(token.substr(0, colon));
        const auto emission = units::parse_quantity(token.substr(colon + 1));
        if (absorption.unit != units::Unit::PhotonNanometer ||
            emission.unit != units::Unit::PhotonNanometer) {
            throw std::invalid_argument("a Stokes wavelength pair must use nm, e.g. --stokes 450nm:565nm");
        }
        return relation::StokesShift{
            relation::stokes_shift_from_wavelengths(absorption.value, emission.value)};
    }
    const auto quantity = units::parse_quantity(token);
    if (quantity.unit == units::Unit::PhotonNanometer) {
        throw std::invalid_argument(
            "a Stokes shift in nm requires both band maxima as <abs>nm:<em>nm; a wavelength "
            "difference alone does not determine an energy");
    }
    return relation::StokesShift{units::to_energy_ev(quantity)};
}

void report_case(std::ostream& out, const relation::CaseStudyInput& input, bool note_sensitivity) {
    const auto stats = relation::resolve_gap_statistics(input);
    const auto result = relation::evaluate_case_study(input);
    const double ratio = std::sqrt(result.ratio_squared);

    out << "tau_D = " << round3(result.tau_decoherence) << " fs = " << round3(ratio)
        << " x tau_g (" << round3(input.tau_g) << " fs) at " << round3(input.temperature)
        << " K\n";
    if (!input.label.empty()) key_value(out, "label", input.label);
    key_value(out, "tau_g_fs", input.tau_g);
    key_value(out, "temperature_K", input.temperature);
    key_value(out, "gap_variance_eV2", stats.variance);
    key_value(out, "gap_rms_eV", std::sqrt(stats.variance));
    key_value(out, "lambda_eV", stats.lambda_reorg);
    key_value(out, "stokes_shift_eV", 2.0 * stats.lambda_reorg);
    key_value(out, "ratio_squared", result.ratio_squared);
    key_value(out, "ratio", ratio);
    key_value(out, "tau_D_fs", result.tau_decoherence);
    key_value(out, "pathway",
              result.pathway == relation::RatioPathway::HighTemperature ? "high-temperature"
                                                                        : "general");
    if (note_sensitivity) {
        // Room temperature defaulted to 298 K; show the spread over
        // plausible lab temperatures.
        auto tau_at = [&](double temp) {
            relation::CaseStudyInput probe = input;
            probe.temperature = temp;
            return relation::evaluate_case_study(probe).tau_decoherence;
        };
        out << "note: temperature defaulted to 298 K; tau_D spans "
            << round3(tau_at(293.0)) << "-" << round3(tau_at(300.0)) << " fs over 293-300 K\n";
    }
}

void run_relate(const RelateOptions& options, std::ostream& out) {
    if (!options.batch_file.empty()) {
        if (!options.tau_g.empty() || !options.rms.empty() || !options.stokes.empty()) {
            throw std::invalid_argument("--batch cannot be combined with single-case flags");
        }
        const auto records = relation::parse_case_study_file(options.batch_file);
        if (records.empty()) throw std::invalid_argument("batch file contains no records");
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) out << '\n';
            report_case(out, records[i], false);
        }
        return;
    }

    if (options.tau_g.empty()) throw std::invalid_argument("--tau-g is required");
    if (options.rms.empty() == options.stokes.empty()) {
        throw std::invalid_argument("specify exactly one of --rms and --stokes");
    }

    relation::CaseStudyInput input;
    input.tau_g = time_fs(options.tau_g);
    input.temperature = temperature_k(options.temperature);
    if (!options.rms.empty()) {
        input.gap_spec = relation::RmsFluctuation{energy_ev(options.rms)};
    } else {
        input.gap_spec = parse_stokes_flag(options.stokes);
    }
    report_case(out, input, !options.temperature_given);
}

// ---------------------------------------------------------------- widths --

struct WidthsOptions {
    std::string omega;
    std::string temperature;
};

void run_widths(const WidthsOptions& options, std::ostream& out) {
    const double omega = angular_frequency(options.omega);
    const double temperature = temperature_k(options.temperature);
    const double x = units::hbar * omega / (2.0 * units::thermal_energy(temperature));

    const double tanh_width = bath::width_factor(omega, temperature, bath::WidthModel::TanhHarmonic);
    const double nitzan = bath::width_factor(omega, temperature, bath::WidthModel::NitzanA);
    const double high_t = bath::width_factor(omega, temperature, bath::WidthModel::HighTemperature);

    out << "thermal width factors at omega = " << round3(omega) << " rad/fs, T = "
        << round3(temperature) << " K (hbar*omega/2kT = " << round3(x) << ")\n";
    key_value(out, "omega_rad_fs", omega);
    key_value(out, "temperature_K", temperature);
    key_value(out, "x", x);
    key_value(out, "width_tanh", tanh_width);
    key_value(out, "width_nitzan", nitzan);
    key_value(out, "width_high_temperature", high_t);
}

// -------------------------------------------------------------- spinboson --

struct SpinbosonOptions {
    std::string density{"ohmic"};
    std::string eta;
    std::string omega_c;
    std::string lambda_total;
    std::string omega_d;
    std::string table_file;
    std::string temperature{"298K"};
    std::string t_max;
    std::size_t n_t{200};
    std::size_t n_modes{4000};
    std::string omega_max;
    std::string golden_rule{"discrete"};
    double quad_tol{1e-8};
    unsigned quad_depth{15};
    std::string output;
};

bath::SpectralDensity density_from(const SpinbosonOptions& options) {
    if (options.density == "ohmic") {
        if (options.eta.empty() || options.omega_c.empty()) {
            throw std::invalid_argument("ohmic density needs --eta and --omega-c");
        }
        return bath::SpectralDensity::ohmic_exponential(eta_ev_fs(options.eta),
                                                        angular_frequency(options.omega_c));
    }
    if (options.density == "debye") {
        if (options.lambda_total.empty() || options.omega_d.empty()) {
            throw std::invalid_argument("debye density needs --lambda and --omega-d");
        }
        return bath::SpectralDensity::debye(energy_ev(options.lambda_total),
                                            angular_frequency(options.omega_d));
    }
    if (options.density == "table") {
        if (options.table_file.empty()) throw std::invalid_argument("table density needs --table");
        return bath::SpectralDensity::from_table_file(options.table_file);
    }
    throw std::invalid_argument("unknown density '" + options.density + "' (ohmic, debye, table)");
}

void run_spinboson(const SpinbosonOptions& options, std::ostream& out, std::ostream& err) {
    const auto density = density_from(options);
    const double temperature = temperature_k(options.temperature);
    const double omega_max =
        options.omega_max.empty() ? density.default_omega_max() : angular_frequency(options.omega_max);
    const auto discretized = bath::discretize(density, options.n_modes, omega_max);
    if (discretized.tail_warning) {
        err << "warning: " << round3(100.0 * discretized.tail_fraction)
            << "% of the reorganization energy lies beyond omega_max\n";
    }
    const auto& modes = discretized.modes;

    const bool quadrature = options.golden_rule == "quadrature";
    if (!quadrature && options.golden_rule != "discrete") {
        throw std::invalid_argument("--goldenrule must be discrete or quadrature");
    }
    decoherence::QuadratureOptions quad;
    quad.relative_tolerance = options.quad_tol;
    quad.omega_max = omega_max;
    quad.max_depth = options.quad_depth;

    const auto times = time_grid(time_fs(options.t_max), options.n_t);

    using bath::WidthModel;
    const auto alpha_tanh =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::TanhHarmonic);
    const auto alpha_nitzan =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::NitzanA);
    const auto alpha_high =
        decoherence::gaussian_decoherence_exponent(modes, temperature, WidthModel::HighTemperature);
    const auto classical = oracle::analytic_classical_response(modes, times);

    io::CsvTable table;
    {
        std::ostringstream detail;
        detail << density.describe() << " temp=" << temperature << "K n_modes=" << options.n_modes
               << " omega_max=" << omega_max << "rad/fs goldenrule=" << options.golden_rule
               << " lambda_total=" << discretized.reorganization_total << "eV";
        table.header_comment = config_header("spinboson", detail.str());
    }
    table.columns = {"t_fs", "D_goldenrule", "D_gaussian_tanh", "D_gaussian_nitzan",
                     "D_gaussian_highT", "C_classical"};
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const double exponent =
            quadrature ? decoherence::golden_rule_exponent(density, temperature, t, quad)
                       : decoherence::golden_rule_exponent(modes, temperature, t);
        table.rows.push_back({t, std::exp(-exponent), std::exp(-alpha_tanh * t * t),
                              std::exp(-alpha_nitzan * t * t), std::exp(-alpha_high * t * t),
                              classical[i].second});
    }

    if (options.output.empty()) {
        io::write_csv(out, table);
    } else {
        io::write_csv(std::filesystem::path(options.output), table);
        out << "wrote " << options.output << '\n';
    }
}

// ---------------------------------------------------------------- respond --

struct RespondOptions {
    std::string input;
    std::string max_lag;
    double threshold{0.6};
    std::string output;
};

void run_respond(const RespondOptions& options, std::ostream& out) {
    const auto trajectory = solvation::GapTrajectory::from_file(options.input);
    const double max_lag =
        options.max_lag.empty() ? trajectory.duration() / 2.0 : time_fs(options.max_lag);
    const auto curve = solvation::estimate_response(trajectory, max_lag);
    const double tau_g = solvation::fit_gaussian_timescale(curve, options.threshold);

    double mean = 0.0;
    for (const double u : trajectory.samples) mean += u;
    mean /= static_cast<double>(trajectory.samples.size());
    double variance = 0.0;
    for (const double u : trajectory.samples) variance += (u - mean) * (u - mean);
    variance /= static_cast<double>(trajectory.samples.size());

    out << "short-time Gaussian timescale tau_g = " << round3(tau_g) << " fs (threshold C >= "
        << options.threshold << ")\n";
    key_value(out, "n_samples", static_cast<double>(trajectory.samples.size()));
    key_value(out, "dt_fs", trajectory.dt);
    key_value(out, "max_lag_fs", max_lag);
    key_value(out, "threshold", options.threshold);
    key_value(out, "mean_gap_eV", mean);
    key_value(out, "gap_variance_eV2", variance);
    key_value(out, "tau_g_fs", tau_g);

    if (!options.output.empty()) {
        io::CsvTable table;
        table.header_comment = config_header(
            "respond", "input=" + options.input + " max_lag=" + io::format_double(max_lag) + "fs");
        table.columns = {"t_fs", "C"};
        for (const auto& [t, c] : curve) table.rows.push_back({t, c});
        io::write_csv(std::filesystem::path(options.output), table);
        out << "wrote " << options.output << '\n';
    }
}

// ----------------------------------------------------------------- oracle --

struct OracleOptions {
    std::vector<std::string> modes;
    std::string temperature{"298K"};
    std::size_t n_samples{1000};
    std::string dt;
    std::size_t n_steps{512};
    std::uint64_t seed{0};
    std::string max_lag;
    double threshold{0.9};
    std::string output;
    std::string trajectory_prefix;
};

void run_oracle(const OracleOptions& options, std::ostream& out) {
    oracle::EnsembleSpec spec;
    for (const auto& token : options.modes) spec.modes.push_back(parse_mode(token));
    spec.temperature = temperature_k(options.temperature);
    spec.n_samples = options.n_samples;
    spec.dt = time_fs(options.dt);
    spec.n_steps = options.n_steps;
    spec.seed = options.seed;

    const double max_lag = options.max_lag.empty()
                               ? spec.dt * static_cast<double>(spec.n_steps - 1) / 2.0
                               : time_fs(options.max_lag);
    const auto response = oracle::ensemble_response(spec, max_lag);
    const auto analytic = oracle::analytic_classical_response(spec.modes, response.times);

    solvation::ResponseCurve mean_curve;
    mean_curve.reserve(response.times.size());
    for (std::size_t k = 0; k < response.times.size(); ++k) {
        mean_curve.emplace_back(response.times[k], response.mean[k]);
    }
    const double tau_fit = solvation::fit_gaussian_timescale(mean_curve, options.threshold);

    double lambda_total = 0.0;
    double lambda_omega2 = 0.0;
    for (const auto& mode : spec.modes) {
        lambda_total += mode.lambda;
        lambda_omega2 += mode.lambda * mode.omega * mode.omega;
    }
    const double tau_expected = std::sqrt(lambda_total / lambda_omega2);
    const double variance_expected = 2.0 * units::thermal_energy(spec.temperature) * lambda_total;

    out << "ensemble of " << spec.n_samples << " classical trajectories, seed " << spec.seed
        << ": tau_g = " << round3(tau_fit) << " fs (analytic " << round3(tau_expected) << " fs)\n";
    key_value(out, "seed", static_cast<double>(spec.seed));
    key_value(out, "n_samples", static_cast<double>(spec.n_samples));
    key_value(out, "n_steps", static_cast<double>(spec.n_steps));
    key_value(out, "dt_fs", spec.dt);
    key_value(out, "lambda_total_eV", lambda_total);
    key_value(out, "gap_variance_eV2", response.variance);
    key_value(out, "gap_variance_stderr_eV2", response.variance_standard_error);
    key_value(out, "gap_variance_expected_eV2", variance_expected);
    key_value(out, "tau_g_fit_fs", tau_fit);
    key_value(out, "tau_g_expected_fs", tau_expected);
    key_value(out, "threshold", options.threshold);

    if (!options.output.empty()) {
        io::CsvTable table;
        std::ostringstream detail;
        detail << "seed=" << spec.seed << " n_samples=" << spec.n_samples
               << " n_steps=" << spec.n_steps << " dt=" << io::format_double(spec.dt) << "fs temp="
               << spec.temperature << "K";
        table.header_comment = config_header("oracle", detail.str());
        table.columns = {"t_fs", "C_estimate", "C_stderr", "C_analytic"};
        for (std::size_t k = 0; k < response.times.size(); ++k) {
            table.rows.push_back({response.times[k], response.mean[k], response.standard_error[k],
                                  analytic[k].second});
        }
        io::write_csv(std::filesystem::path(options.output), table);
        out << "wrote " << options.output << '\n';
    }

    if (!options.trajectory_prefix.empty()) {
        const auto trajectories = oracle::sample_gap_trajectories(spec);
        for (std::size_t s = 0; s < trajectories.size(); ++s) {
            trajectories[s].to_file(options.trajectory_prefix + std::to_string(s) + ".dat");
        }
        out << "wrote " << trajectories.size() << " trajectories to " << options.trajectory_prefix
            << "*.dat\n";
    }
}

// ------------------------------------------------------------ casestudies --

void run_casestudies(std::ostream& out) {
    const auto& cases = relation::reference_case_studies();

    out << std::left << std::setw(26) << "case" << std::right << std::setw(10) << "tau_g_fs"
        << std::setw(10) << "T_K" << std::setw(9) << "rms_eV" << std::setw(10) << "tau_D_fs"
        << std::setw(13) << "reported_fs" << std::setw(9) << "dev_pct" << "  status\n";

    for (const auto& entry : cases) {
        const auto stats = relation::resolve_gap_statistics(entry.input);
        const auto result = relation::evaluate_case_study(entry.input);
        const double deviation =
            100.0 * (result.tau_decoherence - entry.reported_tau_decoherence) /
            entry.reported_tau_decoherence;

        std::string status;
        if (!entry.normative) {
            status = "ASSUMPTION (non-normative)";
        } else if (std::abs(result.tau_decoherence - entry.reported_tau_decoherence) <=
                   entry.tolerance_fraction * entry.reported_tau_decoherence) {
            status = "ok";
        } else {
            status = "DEVIATION";
        }

        out << std::left << std::setw(26) << entry.input.label << std::right << std::setw(10)
            << round3(entry.input.tau_g) << std::setw(10) << round3(entry.input.temperature)
            << std::setw(9) << round3(std::sqrt(stats.variance)) << std::setw(10)
            << round3(result.tau_decoherence) << std::setw(13)
            << round3(entry.reported_tau_decoherence) << std::setw(9) << round3(deviation) << "  "
            << status << '\n';
    }

    out << '\n';
    for (const auto& entry : cases) {
        out << entry.input.label << ": " << entry.note << '\n';
    }
    out << "temperatures are nominal room temperature (298 K); over 293-300 K the computed tau_D"
           " varies by about +-1%\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"decoherence and short-time solvation timescales for solute/bath systems"};
    app.name("decosolv");
    app.set_version_flag("--version", std::string("decosolv ") + version);
    app.require_subcommand(0, 1);

    RelateOptions relate;
    auto* relate_cmd = app.add_subcommand(
        "relate", "predict the decoherence time from a solvation timescale and gap statistics");
    relate_cmd->add_option("--tau-g", relate.tau_g, "Gaussian solvation timescale, e.g. 10.6fs");
    auto* temp_opt =
        relate_cmd->add_option("--temp", relate.temperature, "temperature, e.g. 298K (default)");
    relate_cmd->add_option("--rms", relate.rms, "rms gap fluctuation, e.g. 0.21eV");
    relate_cmd->add_option("--stokes", relate.stokes,
                           "Stokes shift, e.g. 1.7eV or 450nm:565nm (abs:em maxima)");
    relate_cmd->add_option("--batch", relate.batch_file,
                           "evaluate records from a file: label tau_g temp rms=...|stokes=...");

    WidthsOptions widths;
    auto* widths_cmd =
        app.add_subcommand("widths", "thermal wavepacket width factors, all three prescriptions");
    widths_cmd->add_option("--omega", widths.omega, "mode frequency, e.g. 1.5rad/fs or 1500cm-1")
        ->required();
    widths_cmd->add_option("--temp", widths.temperature, "temperature, e.g. 298K")->required();

    SpinbosonOptions spinboson;
    auto* spinboson_cmd = app.add_subcommand(
        "spinboson", "golden-rule and Gaussian decoherence curves for a spectral density");
    spinboson_cmd->add_option("--density", spinboson.density, "ohmic | debye | table");
    spinboson_cmd->add_option("--eta", spinboson.eta, "ohmic coupling, e.g. 0.3eVfs");
    spinboson_cmd->add_option("--omega-c", spinboson.omega_c, "ohmic cutoff, e.g. 1rad/fs");
    spinboson_cmd->add_option("--lambda", spinboson.lambda_total,
                              "Debye total reorganization energy, e.g. 0.2eV");
    spinboson_cmd->add_option("--omega-d", spinboson.omega_d, "Debye frequency, e.g. 0.05rad/fs");
    spinboson_cmd->add_option("--table", spinboson.table_file,
                              "two-column spectral density file (cm-1, eV)");
    spinboson_cmd->add_option("--temp", spinboson.temperature, "temperature (default 298K)");
    spinboson_cmd->add_option("--t-max", spinboson.t_max, "end of the time grid, e.g. 20fs")
        ->required();
    spinboson_cmd->add_option("--n-t", spinboson.n_t, "number of grid points (default 200)");
    spinboson_cmd->add_option("--n-modes", spinboson.n_modes,
                              "discretization modes (default 4000)");
    spinboson_cmd->add_option("--omega-max", spinboson.omega_max,
                              "discretization cutoff (default 50x characteristic frequency)");
    spinboson_cmd->add_option("--goldenrule", spinboson.golden_rule,
                              "discrete | quadrature (default discrete)");
    spinboson_cmd->add_option("--quad-tol", spinboson.quad_tol,
                              "quadrature relative tolerance (default 1e-8)");
    spinboson_cmd->add_option("--quad-depth", spinboson.quad_depth,
                              "quadrature max refinement depth (default 15)");
    spinboson_cmd->add_option("--output", spinboson.output, "CSV path (default: stdout)");

    RespondOptions respond;
    auto* respond_cmd = app.add_subcommand(
        "respond", "estimate C(t) and the Gaussian timescale from a gap trajectory file");
    respond_cmd->add_option("--input", respond.input, "two-column trajectory (t_fs, U_eV)")
        ->required();
    respond_cmd->add_option("--max-lag", respond.max_lag,
                            "largest lag, e.g. 50fs (default: half the trajectory)");
    respond_cmd->add_option("--threshold", respond.threshold,
                            "fit window C >= threshold (default 0.6)");
    respond_cmd->add_option("--output", respond.output, "write the estimated C(t) as CSV");

    OracleOptions oracle_options;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Monte Carlo harmonic-bath ensemble vs the analytic classical response");
    oracle_cmd->add_option("--mode", oracle_options.modes,
                           "bath mode <omega>:<lambda>, e.g. 1.2rad/fs:0.05eV (repeatable)")
        ->required();
    oracle_cmd->add_option("--temp", oracle_options.temperature, "temperature (default 298K)");
    oracle_cmd->add_option("--n-samples", oracle_options.n_samples, "ensemble size (default 1000)");
    oracle_cmd->add_option("--dt", oracle_options.dt, "time step, e.g. 0.1fs")->required();
    oracle_cmd->add_option("--n-steps", oracle_options.n_steps,
                           "samples per trajectory (default 512)");
    oracle_cmd->add_option("--seed", oracle_options.seed, "RNG seed (default 0)");
    oracle_cmd->add_option("--max-lag", oracle_options.max_lag,
                           "largest lag (default: half the trajectory)");
    oracle_cmd->add_option("--threshold", oracle_options.threshold,
                           "fit window C >= threshold (default 0.9)");
    oracle_cmd->add_option("--output", oracle_options.output, "CSV path for the estimated C(t)");
    oracle_cmd->add_option("--trajectory-out", oracle_options.trajectory_prefix,
                           "write each sample as <prefix><i>.dat");

    auto* casestudies_cmd =
        app.add_subcommand("casestudies", "bundled experimental cases with published timescales");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    relate.temperature_given = temp_opt->count() > 0;

    try {
        if (relate_cmd->parsed()) {
            run_relate(relate, out);
        } else if (widths_cmd->parsed()) {
            run_widths(widths, out);
        } else if (spinboson_cmd->parsed()) {
            run_spinboson(spinboson, out, err);
        } else if (respond_cmd->parsed()) {
            run_respond(respond, out);
        } else if (oracle_cmd->parsed()) {
            run_oracle(oracle_options, out);
        } else if (casestudies_cmd->parsed()) {
            run_casestudies(out);
        } else {
            out << app.help();
            return exit_usage;
        }
    } catch (const decoherence::QuadratureError& error) {
        err << "numerical failure: " << error.what() << '\n';
        return exit_numerical;
    } catch (const solvation::FitError& error) {
        err << "numerical failure: " << error.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& error) {
        err << "error: " << error.what() << '\n';
        return exit_usage;
    }
    return exit_success;
}

} // namespace decosolv::cli
