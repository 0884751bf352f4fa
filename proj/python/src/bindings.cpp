// Python bindings for the decosolv core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <variant>

#include "decosolv/bath.hpp"
#include "decosolv/decoherence.hpp"
#include "decosolv/oracle.hpp"
#include "decosolv/relation.hpp"
#include "decosolv/solvation.hpp"
#include "decosolv/units.hpp"
#include "decosolv/version.hpp"

namespace py = pybind11;
using namespace decosolv;

namespace {

units::Unit unit_from_string(const std::string& symbol) {
    // Reuse the suffix parser so unit spellings stay in one place.
    return units::parse_quantity("1" + symbol).unit;
}

} // namespace

PYBIND11_MODULE(_decosolv, m) {
    m.doc() = "decoherence and short-time solvation timescales for solute/bath systems";
    m.attr("__version__") = version;

    // ------------------------------------------------------------- units --
    m.attr("K_BOLTZMANN_EV_PER_K") = units::k_boltzmann;
    m.attr("HBAR_EV_FS") = units::hbar;
    m.attr("HC_EV_NM") = units::hc_ev_nm;

    m.def("thermal_energy", &units::thermal_energy, py::arg("temperature_kelvin"),
          "kB*T in eV");
    m.def(
        "convert",
        [](double value, const std::string& from, const std::string& to) {
            return units::convert({value, unit_from_string(from)}, unit_from_string(to)).value;
        },
        py::arg("value"), py::arg("from_unit"), py::arg("to_unit"),
        "convert between eV, cm-1, nm (photon energy), rad/fs, fs, ps and K");
    m.def(
        "parse_quantity",
        [](const std::string& text) {
            const auto q = units::parse_quantity(text);
            return std::make_pair(q.value, std::string(units::unit_symbol(q.unit)));
        },
        py::arg("text"), "parse a suffixed value such as '10.6fs' into (value, unit)");

    // -------------------------------------------------------------- bath --
    py::class_<bath::BathMode>(m, "BathMode")
        .def(py::init([](double omega, double lambda) {
                 return bath::BathMode{omega, lambda};
             }),
             py::arg("omega"), py::arg("lambda_"))
        .def_readwrite("omega", &bath::BathMode::omega)
        .def_readwrite("lambda_", &bath::BathMode::lambda)
        .def("__repr__", [](const bath::BathMode& mode) {
            std::ostringstream s;
            s << "BathMode(omega=" << mode.omega << ", lambda_=" << mode.lambda << ")";
            return s.str();
        });

    py::enum_<bath::WidthModel>(m, "WidthModel")
        .value("TANH_HARMONIC", bath::WidthModel::TanhHarmonic)
        .value("NITZAN_A", bath::WidthModel::NitzanA)
        .value("HIGH_TEMPERATURE", bath::WidthModel::HighTemperature);

    m.def("width_factor", &bath::width_factor, py::arg("omega"), py::arg("temperature"),
          py::arg("model"), "dimensionless thermal width factor W in a = (m*omega/hbar)*W");
    m.def(
        "total_reorganization",
        [](const std::vector<bath::BathMode>& modes) { return bath::total_reorganization(modes); },
        py::arg("modes"));

    py::class_<bath::SpectralDensity>(m, "SpectralDensity")
        .def_static("ohmic_exponential", &bath::SpectralDensity::ohmic_exponential,
                    py::arg("eta_ev_fs"), py::arg("omega_c"))
        .def_static("debye", &bath::SpectralDensity::debye, py::arg("lambda_total_ev"),
                    py::arg("omega_debye"))
        .def_static("tabulated", &bath::SpectralDensity::tabulated, py::arg("omegas"),
                    py::arg("values"))
        .def_static("from_table_file", &bath::SpectralDensity::from_table_file, py::arg("path"))
        .def("__call__", &bath::SpectralDensity::operator(), py::arg("omega"))
        .def("reorganization_energy", &bath::SpectralDensity::reorganization_energy)
        .def("reorganization_energy_below", &bath::SpectralDensity::reorganization_energy_below,
             py::arg("omega_max"))
        .def("default_omega_max", &bath::SpectralDensity::default_omega_max)
        .def("characteristic_frequency", &bath::SpectralDensity::characteristic_frequency)
        .def("describe", &bath::SpectralDensity::describe);

    py::class_<bath::DiscretizedBath>(m, "DiscretizedBath")
        .def_readonly("modes", &bath::DiscretizedBath::modes)
        .def_readonly("reorganization_total", &bath::DiscretizedBath::reorganization_total)
        .def_readonly("tail_fraction", &bath::DiscretizedBath::tail_fraction)
        .def_readonly("tail_warning", &bath::DiscretizedBath::tail_warning);

    m.def("discretize", &bath::discretize, py::arg("density"), py::arg("n_modes"),
          py::arg("omega_max"),
          "project a spectral density onto a uniform midpoint mode grid");

    // ------------------------------------------------------- decoherence --
    py::register_exception<decoherence::QuadratureError>(m, "QuadratureError",
                                                         PyExc_RuntimeError);

    py::class_<decoherence::GaussianCurve>(m, "GaussianCurve")
        .def_static("from_alpha", &decoherence::GaussianCurve::from_alpha, py::arg("alpha"))
        .def_static("from_tau", &decoherence::GaussianCurve::from_tau, py::arg("tau"))
        .def_readonly("alpha", &decoherence::GaussianCurve::alpha)
        .def_readonly("tau", &decoherence::GaussianCurve::tau)
        .def("__call__", &decoherence::GaussianCurve::operator(), py::arg("t"));

    py::enum_<decoherence::CurveKind>(m, "CurveKind")
        .value("GAUSSIAN", decoherence::CurveKind::Gaussian)
        .value("GOLDEN_RULE", decoherence::CurveKind::GoldenRule);

    py::class_<decoherence::DecoherenceCurve>(m, "DecoherenceCurve")
        .def_readonly("times", &decoherence::DecoherenceCurve::times)
        .def_readonly("values", &decoherence::DecoherenceCurve::values)
        .def_readonly("kind", &decoherence::DecoherenceCurve::kind);

    py::class_<decoherence::QuadratureOptions>(m, "QuadratureOptions")
        .def(py::init<>())
        .def_readwrite("relative_tolerance", &decoherence::QuadratureOptions::relative_tolerance)
        .def_readwrite("omega_max", &decoherence::QuadratureOptions::omega_max)
        .def_readwrite("max_depth", &decoherence::QuadratureOptions::max_depth);

    m.def(
        "gaussian_decoherence_exponent",
        [](const std::vector<bath::BathMode>& modes, double temperature, bath::WidthModel model) {
            return decoherence::gaussian_decoherence_exponent(modes, temperature, model);
        },
        py::arg("modes"), py::arg("temperature"), py::arg("model"),
        "alpha_D with D(t) = exp(-alpha_D t^2)");
    m.def("decoherence_time", &decoherence::decoherence_time, py::arg("alpha"),
          "tau_D = 1/sqrt(2 alpha)");
    m.def(
        "golden_rule_exponent",
        [](const std::vector<bath::BathMode>& modes, double temperature, double time) {
            return decoherence::golden_rule_exponent(modes, temperature, time);
        },
        py::arg("modes"), py::arg("temperature"), py::arg("time"));
    m.def(
        "golden_rule_exponent",
        [](const bath::SpectralDensity& density, double temperature, double time,
           const decoherence::QuadratureOptions& options) {
            return decoherence::golden_rule_exponent(density, temperature, time, options);
        },
        py::arg("density"), py::arg("temperature"), py::arg("time"),
        py::arg("options") = decoherence::QuadratureOptions{});
    m.def(
        "golden_rule_curve",
        [](const std::vector<bath::BathMode>& modes, double temperature,
           const std::vector<double>& times) {
            return decoherence::golden_rule_curve(modes, temperature, times);
        },
        py::arg("modes"), py::arg("temperature"), py::arg("times"));
    m.def(
        "golden_rule_curve",
        [](const bath::SpectralDensity& density, double temperature,
           const std::vector<double>& times, const decoherence::QuadratureOptions& options) {
            return decoherence::golden_rule_curve(density, temperature, times, options);
        },
        py::arg("density"), py::arg("temperature"), py::arg("times"),
        py::arg("options") = decoherence::QuadratureOptions{});
    m.def("gaussian_curve", &decoherence::gaussian_curve, py::arg("curve"), py::arg("times"));

    // --------------------------------------------------------- solvation --
    py::register_exception<solvation::FitError>(m, "FitError", PyExc_RuntimeError);

    py::class_<solvation::GapStatistics>(m, "GapStatistics")
        .def_static("linear_response", &solvation::GapStatistics::linear_response,
                    py::arg("mean_gap"), py::arg("lambda_reorg"), py::arg("temperature"))
        .def_static("from_rms", &solvation::GapStatistics::from_rms, py::arg("mean_gap"),
                    py::arg("rms_fluctuation"), py::arg("temperature"))
        .def_static("from_stokes", &solvation::GapStatistics::from_stokes, py::arg("mean_gap"),
                    py::arg("stokes_shift"), py::arg("temperature"))
        .def_readonly("mean_gap", &solvation::GapStatistics::mean_gap)
        .def_readonly("variance", &solvation::GapStatistics::variance)
        .def_readonly("lambda_reorg", &solvation::GapStatistics::lambda_reorg)
        .def_readonly("temperature", &solvation::GapStatistics::temperature);

    py::class_<solvation::GapTrajectory>(m, "GapTrajectory")
        .def(py::init([](double dt, std::vector<double> samples) {
                 solvation::GapTrajectory trajectory;
                 trajectory.dt = dt;
                 trajectory.samples = std::move(samples);
                 return trajectory;
             }),
             py::arg("dt"), py::arg("samples"))
        .def_static("from_file", &solvation::GapTrajectory::from_file, py::arg("path"))
        .def("to_file", &solvation::GapTrajectory::to_file, py::arg("path"))
        .def_readwrite("dt", &solvation::GapTrajectory::dt)
        .def_readwrite("samples", &solvation::GapTrajectory::samples)
        .def("duration", &solvation::GapTrajectory::duration);

    m.def(
        "solvation_exponent",
        [](const std::vector<bath::BathMode>& modes, double gap_variance, double temperature) {
            return solvation::solvation_exponent(modes, gap_variance, temperature);
        },
        py::arg("modes"), py::arg("gap_variance"), py::arg("temperature"),
        "alpha_C with C(t) = exp(-alpha_C t^2)");
    m.def("variance_from_stokes", &solvation::variance_from_stokes, py::arg("stokes_shift"),
          py::arg("temperature"));
    m.def("stokes_from_variance", &solvation::stokes_from_variance, py::arg("variance"),
          py::arg("temperature"));
    m.def("estimate_response", &solvation::estimate_response, py::arg("trajectory"),
          py::arg("max_lag"), "normalized gap autocorrelation on the lag grid");
    m.def("fit_gaussian_timescale", &solvation::fit_gaussian_timescale, py::arg("curve"),
          py::arg("threshold") = 0.6);

    // ---------------------------------------------------------- relation --
    py::enum_<relation::RatioPathway>(m, "RatioPathway")
        .value("GENERAL", relation::RatioPathway::General)
        .value("HIGH_TEMPERATURE", relation::RatioPathway::HighTemperature);

    py::class_<relation::CaseStudyInput>(m, "CaseStudyInput")
        .def(py::init([](std::string label, double tau_g, double temperature, py::object rms,
                         py::object stokes) {
                 relation::CaseStudyInput input;
                 input.label = std::move(label);
                 input.tau_g = tau_g;
                 input.temperature = temperature;
                 const bool has_rms = !rms.is_none();
                 const bool has_stokes = !stokes.is_none();
                 if (has_rms == has_stokes) {
                     throw std::invalid_argument("specify exactly one of rms and stokes");
                 }
                 if (has_rms) {
                     input.gap_spec = relation::RmsFluctuation{rms.cast<double>()};
                 } else {
                     input.gap_spec = relation::StokesShift{stokes.cast<double>()};
                 }
                 return input;
             }),
             py::arg("label"), py::arg("tau_g"), py::arg("temperature"),
             py::arg("rms") = py::none(), py::arg("stokes") = py::none())
        .def_readonly("label", &relation::CaseStudyInput::label)
        .def_readonly("tau_g", &relation::CaseStudyInput::tau_g)
        .def_readonly("temperature", &relation::CaseStudyInput::temperature)
        .def_property_readonly("rms",
                               [](const relation::CaseStudyInput& input) -> py::object {
                                   if (const auto* rms =
                                           std::get_if<relation::RmsFluctuation>(&input.gap_spec)) {
                                       return py::float_(rms->value);
                                   }
                                   return py::none();
                               })
        .def_property_readonly("stokes", [](const relation::CaseStudyInput& input) -> py::object {
            if (const auto* stokes = std::get_if<relation::StokesShift>(&input.gap_spec)) {
                return py::float_(stokes->value);
            }
            return py::none();
        });

    py::class_<relation::RelationResult>(m, "RelationResult")
        .def_readonly("ratio_squared", &relation::RelationResult::ratio_squared)
        .def_readonly("tau_decoherence", &relation::RelationResult::tau_decoherence)
        .def_readonly("pathway", &relation::RelationResult::pathway);

    py::class_<relation::ReferenceCaseStudy>(m, "ReferenceCaseStudy")
        .def_readonly("input", &relation::ReferenceCaseStudy::input)
        .def_readonly("reported_tau_decoherence",
                      &relation::ReferenceCaseStudy::reported_tau_decoherence)
        .def_readonly("tolerance_fraction", &relation::ReferenceCaseStudy::tolerance_fraction)
        .def_readonly("normative", &relation::ReferenceCaseStudy::normative)
        .def_readonly("note", &relation::ReferenceCaseStudy::note);

    m.def(
        "ratio_squared_general",
        [](const std::vector<bath::BathMode>& modes, double gap_variance, double temperature,
           bath::WidthModel model) {
            return relation::ratio_squared_general(modes, gap_variance, temperature, model);
        },
        py::arg("modes"), py::arg("gap_variance"), py::arg("temperature"), py::arg("model"),
        "(tau_D/tau_g)^2 = alpha_C / alpha_D");
    m.def("ratio_squared_high_temperature", &relation::ratio_squared_high_temperature,
          py::arg("gap_variance"), py::arg("temperature"), "12 (kB T)^2 / <dU^2>");
    m.def("stokes_shift_from_wavelengths", &relation::stokes_shift_from_wavelengths,
          py::arg("absorption_nm"), py::arg("emission_nm"));
    m.def("resolve_gap_statistics", &relation::resolve_gap_statistics, py::arg("input"));
    m.def("evaluate_case_study", &relation::evaluate_case_study, py::arg("input"));
    m.def("reference_case_studies", &relation::reference_case_studies,
          py::return_value_policy::reference);

    // ------------------------------------------------------------ oracle --
    py::class_<oracle::EnsembleSpec>(m, "EnsembleSpec")
        .def(py::init([](std::vector<bath::BathMode> modes, double temperature,
                         std::size_t n_samples, double dt, std::size_t n_steps,
                         std::uint64_t seed) {
                 oracle::EnsembleSpec spec;
                 spec.modes = std::move(modes);
                 spec.temperature = temperature;
                 spec.n_samples = n_samples;
                 spec.dt = dt;
                 spec.n_steps = n_steps;
                 spec.seed = seed;
                 oracle::validate(spec);
                 return spec;
             }),
             py::arg("modes"), py::arg("temperature"), py::arg("n_samples"), py::arg("dt"),
             py::arg("n_steps"), py::arg("seed") = 0)
        .def_readonly("modes", &oracle::EnsembleSpec::modes)
        .def_readonly("temperature", &oracle::EnsembleSpec::temperature)
        .def_readonly("n_samples", &oracle::EnsembleSpec::n_samples)
        .def_readonly("dt", &oracle::EnsembleSpec::dt)
        .def_readonly("n_steps", &oracle::EnsembleSpec::n_steps)
        .def_readonly("seed", &oracle::EnsembleSpec::seed);

    py::class_<oracle::EnsembleResponse>(m, "EnsembleResponse")
        .def_readonly("times", &oracle::EnsembleResponse::times)
        .def_readonly("mean", &oracle::EnsembleResponse::mean)
        .def_readonly("standard_error", &oracle::EnsembleResponse::standard_error)
        .def_readonly("variance", &oracle::EnsembleResponse::variance)
        .def_readonly("variance_standard_error",
                      &oracle::EnsembleResponse::variance_standard_error)
        .def_readonly("n_samples", &oracle::EnsembleResponse::n_samples);

    m.def("sample_gap_trajectory", &oracle::sample_gap_trajectory, py::arg("spec"),
          py::arg("sample_index"));
    m.def("sample_gap_trajectories", &oracle::sample_gap_trajectories, py::arg("spec"));
    m.def(
        "analytic_classical_response",
        [](const std::vector<bath::BathMode>& modes, const std::vector<double>& times) {
            return oracle::analytic_classical_response(modes, times);
        },
        py::arg("modes"), py::arg("times"),
        "C(t) = sum lambda cos(omega t) / sum lambda");
    m.def("ensemble_response", &oracle::ensemble_response, py::arg("spec"), py::arg("max_lag"));
}
