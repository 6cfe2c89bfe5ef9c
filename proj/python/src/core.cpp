// Copyright 2026 The nlasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlasim/amplifier.hpp"
#include "nlasim/analysis.hpp"
#include "nlasim/config.hpp"
#include "nlasim/errors.hpp"
#include "nlasim/experiments.hpp"
#include "nlasim/fock.hpp"
#include "nlasim/report.hpp"

namespace py = pybind11;
using namespace nlasim;

namespace {

py::dict fringe_to_dict(const FringeData& f) {
  py::dict d;
  std::vector<double> phase, click, mean, single;
  for (const auto& p : f.points) {
    phase.push_back(p.phase);
    click.push_back(p.click_probability);
    mean.push_back(p.mean_photon);
    single.push_back(p.single_photon_probability);
  }
  d["branch"] = to_string(f.branch);
  d["herald_probability"] = f.herald_probability;
  d["phase"] = phase;
  d["click_probability"] = click;
  d["mean_photon"] = mean;
  d["single_photon_probability"] = single;
  d["visibility"] = visibility(f);
  return d;
}

py::dict concurrence_inputs_dict(const ConcurrenceInputs& in) {
  py::dict d;
  d["p00"] = in.p00;
  d["p10"] = in.p10;
  d["p01"] = in.p01;
  d["p11"] = in.p11;
  d["d_mag"] = in.d_mag;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Heralded noiseless linear amplifier simulator";

  py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<StageConfig>(m, "StageConfig")
      .def(py::init([](double eta, double kappa, double epsilon) { return StageConfig{eta, kappa, epsilon}; }),
           py::arg("eta") = 0.25, py::arg("kappa") = 0.5, py::arg("epsilon") = 1.0)
      .def_readwrite("eta", &StageConfig::eta)
      .def_readwrite("kappa", &StageConfig::kappa)
      .def_readwrite("epsilon", &StageConfig::ancilla_efficiency)
      .def("gain", &StageConfig::gain);

  py::class_<NlaConfig>(m, "NlaConfig")
      .def(py::init([](int n_stages, double eta, int cutoff, double source_efficiency, double kappa) {
             NlaConfig c{n_stages, eta, cutoff, source_efficiency, kappa};
             c.validate();
             return c;
           }),
           py::arg("n_stages") = 1, py::arg("eta") = 0.2, py::arg("cutoff") = 0, py::arg("source_efficiency") = 1.0,
           py::arg("kappa") = 0.5)
      .def_readwrite("n_stages", &NlaConfig::n_stages)
      .def_readwrite("eta", &NlaConfig::eta)
      .def_readwrite("cutoff", &NlaConfig::cutoff)
      .def_readwrite("source_efficiency", &NlaConfig::source_efficiency)
      .def_readwrite("kappa", &NlaConfig::kappa)
      .def("gain", &NlaConfig::gain);

  py::enum_<InputModel>(m, "InputModel")
      .value("VACUUM_MIXTURE", InputModel::kVacuumMixture)
      .value("PHASE_AVERAGED_COHERENT", InputModel::kPhaseAveragedCoherent);

  py::class_<InterferometerConfig>(m, "InterferometerConfig")
      .def(py::init<>())
      .def_readwrite("input_mean_photon", &InterferometerConfig::input_mean_photon)
      .def_readwrite("sigma", &InterferometerConfig::sigma)
      .def_readwrite("tau", &InterferometerConfig::tau)
      .def_readwrite("eta", &InterferometerConfig::eta)
      .def_readwrite("kappa", &InterferometerConfig::kappa)
      .def_readwrite("epsilon", &InterferometerConfig::epsilon)
      .def_readwrite("phase_grid", &InterferometerConfig::phase_grid)
      .def_readwrite("heralded", &InterferometerConfig::heralded)
      .def_readwrite("input", &InterferometerConfig::input)
      .def_readwrite("cutoff", &InterferometerConfig::cutoff)
      .def_static("uniform_phase_grid", &InterferometerConfig::uniform_phase_grid);

  m.def("analytic_gain", &analytic_gain, py::arg("eta"));
  m.def("adjusted_gain", &adjusted_gain, py::arg("eta"), py::arg("input_mean_photon"), py::arg("epsilon"));
  m.def("success_probability_analytic", &success_probability_analytic, py::arg("alpha"), py::arg("g"),
        py::arg("n_stages"));
  m.def("distinguishability_bound", &distinguishability_bound, py::arg("alpha"), py::arg("g"));
  m.def("mixing_condition_check", &mixing_condition_check, py::arg("gamma"), py::arg("eta"), py::arg("alpha"));

  m.def(
      "coherent_amplitudes",
      [](Complex alpha, int cutoff) { return Eigen::VectorXcd(coherent_state(alpha, cutoff).amplitudes()); },
      py::arg("alpha"), py::arg("cutoff"));

  m.def(
      "stage_gain",
      [](double input_mean_photon, const StageConfig& config, int cutoff) {
        const StageGain g = measure_stage_gain(phase_averaged_coherent(std::sqrt(input_mean_photon), cutoff), config);
        py::dict d;
        d["odds_gain"] = g.odds_gain;
        d["mean_photon_gain"] = g.mean_photon_gain;
        d["success_probability"] = g.success_probability;
        d["density"] = Eigen::MatrixXcd(g.output.matrix());
        return d;
      },
      py::arg("input_mean_photon"), py::arg("config") = StageConfig{}, py::arg("cutoff") = 8,
      "Stage gain for a phase-averaged coherent input of the given mean photon number.");

  m.def(
      "nla_full",
      [](Complex alpha, const NlaConfig& config) {
        const NlaResult r = nla_full(alpha, config);
        return py::make_tuple(Eigen::MatrixXcd(r.state.matrix()), r.probability);
      },
      py::arg("alpha"), py::arg("config"), "Returns (normalized density matrix, success probability).");

  m.def(
      "lossy_source_output",
      [](Complex alpha, const NlaConfig& config) {
        const NlaResult r = lossy_source_output(alpha, config);
        return py::make_tuple(Eigen::MatrixXcd(r.state.matrix()), r.probability);
      },
      py::arg("alpha"), py::arg("config"));

  m.def(
      "run_interferometer",
      [](const InterferometerConfig& config) {
        py::list out;
        for (const auto& f : run_interferometer(config)) out.append(fringe_to_dict(f));
        return out;
      },
      py::arg("config"));

  m.def(
      "fit_harmonic",
      [](const std::vector<double>& phases, const std::vector<double>& values) {
        const HarmonicFit f = fit_harmonic(phases, values);
        py::dict d;
        d["offset"] = f.offset;
        d["amplitude"] = f.amplitude;
        d["phase"] = f.phase;
        d["visibility"] = f.visibility;
        d["residual"] = f.residual;
        return d;
      },
      py::arg("phases"), py::arg("values"));

  m.def(
      "concurrence_report",
      [](const InterferometerConfig& config, double p11) {
        const ConcurrenceReport r = concurrence_report(config, p11);
        py::dict d;
        d["c_in_absolute"] = r.c_in_absolute;
        d["c_out_absolute"] = r.c_out_absolute;
        d["c_in_subspace"] = r.c_in_subspace;
        d["c_out_subspace"] = r.c_out_subspace;
        d["c_out_first_order"] = r.c_out_first_order;
        d["input_absolute"] = concurrence_inputs_dict(r.input_absolute);
        d["output_absolute"] = concurrence_inputs_dict(r.output_absolute);
        return d;
      },
      py::arg("config"), py::arg("accidental_p11") = 0.0);

  m.def(
      "epr_distill",
      [](double chi, const NlaConfig& config, const std::string& mode) {
        if (mode != "analytic" && mode != "circuit") throw py::value_error("mode must be 'analytic' or 'circuit'");
        const EprResult r = epr_distill(chi, config, mode == "analytic" ? EprMode::kAnalytic : EprMode::kCircuit);
        py::dict d;
        d["probability"] = r.probability;
        d["ratios"] = r.ratios;
        d["chi_prime"] = r.chi_prime;
        d["entropy_in"] = r.entropy_in;
        d["entropy_out"] = r.entropy_out;
        return d;
      },
      py::arg("chi"), py::arg("config"), py::arg("mode") = "analytic");

  m.def("experiment_names", &experiment_names);
  m.def(
      "run_experiment",
      [](const std::string& name, const std::string& config_text, int threads, const std::string& format) {
        const Config config = Config::parse(config_text, experiment_schema(name));
        Report report;
        {
          py::gil_scoped_release release;
          report = run_experiment(name, config, threads);
        }
        if (format == "csv") return to_csv(report);
        if (format == "json") return to_json(report);
        throw py::value_error("format must be 'csv' or 'json'");
      },
      py::arg("name"), py::arg("config_text") = "", py::arg("threads") = 1, py::arg("format") = "json",
      "Runs a CLI experiment from `key = value` text and returns the serialized report.");
}
