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

#include "nlasim/experiments.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "nlasim/amplifier.hpp"
#include "nlasim/analysis.hpp"
#include "nlasim/optics.hpp"

namespace nlasim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

KeySpec real_key(std::string name, std::string def, double lo, double hi, bool lo_open, bool hi_open,
                 std::string help) {
  return {std::move(name), ValueKind::kReal, std::move(def), std::move(help), lo, hi, lo_open, hi_open};
}

KeySpec int_key(std::string name, std::string def, double lo, double hi, std::string help) {
  return {std::move(name), ValueKind::kInteger, std::move(def), std::move(help), lo, hi};
}

KeySpec input_model_key() {
  KeySpec k{"input_model", ValueKind::kChoice, "vacuum_mixture", "source state model"};
  k.choices = {"vacuum_mixture", "phase_averaged_coherent"};
  return k;
}

std::vector<KeySpec> interferometer_keys(const std::string& sigma_default, bool with_tau) {
  std::vector<KeySpec> keys = {
      real_key("input_mean_photon", "0.02", 0, 1, true, false, "|alpha'|^2 entering the stage"),
      real_key("sigma", sigma_default, 0, 1, false, true, "fraction of the source sent to the reference arm"),
      real_key("eta", "0.2", 0, 1, true, true, "stage gain-control reflectivity"),
      real_key("kappa", "0.5", 0, 1, false, false, "signal/ancilla mixing reflectivity"),
      real_key("epsilon", "1", 0, 1, true, false, "ancilla efficiency"),
      int_key("phase_points", "24", 3, 100000, "phase grid size on [0, 2 pi)"),
      real_key("delta", "0", 0, 1, false, false, "input-preparation splitting (informational)"),
      input_model_key(),
      int_key("cutoff", "0", 0, 40, "source cutoff for coherent input, 0 = automatic"),
  };
  if (with_tau) {
    keys.push_back(real_key("tau", "0.5", 0, 1, false, false, "fraction of the reference arm reaching D1"));
    keys.push_back({"heralded", ValueKind::kBool, "true", "condition on the stage herald"});
  }
  return keys;
}

InterferometerConfig interferometer_from(const Config& c, bool with_tau) {
  InterferometerConfig ic;
  ic.input_mean_photon = c.real("input_mean_photon");
  ic.sigma = c.real("sigma");
  ic.eta = c.real("eta");
  ic.kappa = c.real("kappa");
  ic.epsilon = c.real("epsilon");
  ic.phase_grid = InterferometerConfig::uniform_phase_grid(static_cast<int>(c.integer("phase_points")));
  ic.delta = c.real("delta");
  ic.input =
      c.choice("input_model") == "vacuum_mixture" ? InputModel::kVacuumMixture : InputModel::kPhaseAveragedCoherent;
  ic.cutoff = static_cast<int>(c.integer("cutoff"));
  if (with_tau) {
    ic.tau = c.real("tau");
    ic.heralded = c.boolean("heralded");
  }
  ic.validate();
  return ic;
}

int coherent_cutoff(double mean, int requested) {
  if (requested > 0) return requested;
  int c = 3;
  while (coherent_tail_weight(std::sqrt(mean), c) > 1e-12) ++c;
  return c;
}

struct MeasuredRow {
  double eta;
  double g2;
  double g2_err;
  double v;
  double v_err;
  double v_linear;
};

constexpr MeasuredRow kMeasuredRows[] = {
    {1.0 / 3.0, 2.05, 0.06, 0.929, 0.024, 0.675},
    {0.25, 2.97, 0.08, 0.910, 0.029, 0.514},
    {0.2, 3.85, 0.10, 0.936, 0.022, 0.419},
};

const MeasuredRow* measured_row(double eta) {
  for (const auto& r : kMeasuredRows)
    if (std::abs(r.eta - eta) < 1e-9) return &r;
  return nullptr;
}

Cell opt(const MeasuredRow* row, double MeasuredRow::*field) {
  if (row == nullptr) return std::monostate{};
  return row->*field;
}

Report run_table1(const Config& c, int threads) {
  const auto& etas = c.reals("etas");
  const double m = c.real("input_mean_photon");
  const double eps = c.real("epsilon");
  const std::vector<std::string> lin_models = {"mean_photon_fringe", "click_fringe", "single_photon_fringe",
                                               "subspace_coherence"};
  Report r{"table1", {}, {}};
  r.table.columns = {"eta", "g2_theory", "g2_sim_ideal", "g2_sim_epsilon", "g2_adjusted_formula",
                     "mean_photon_gain_epsilon", "visibility_ideal", "visibility_epsilon", "fit_residual_epsilon",
                     "visibility_d3_phase_offset"};
  for (const auto& name : lin_models) r.table.columns.push_back("linear_" + name);
  for (const char* col : {"measured_g2", "measured_g2_err", "measured_v", "measured_v_err", "measured_v_linear"})
    r.table.columns.push_back(col);

  const std::function<std::vector<Cell>(int)> row_fn = [&](int i) {
    const double eta = etas[static_cast<std::size_t>(i)];
    const DensityOperator in = phase_averaged_coherent(std::sqrt(m), static_cast<int>(c.integer("gain_cutoff")));
    const StageGain ideal = measure_stage_gain(in, {eta, c.real("kappa"), 1.0});
    const StageGain lossy = measure_stage_gain(in, {eta, c.real("kappa"), eps});

    InterferometerConfig ic;
    ic.input_mean_photon = m;
    ic.sigma = c.real_or_auto("sigma").value_or(1.0 - eta);
    ic.tau = c.real("tau");
    ic.eta = eta;
    ic.kappa = c.real("kappa");
    ic.phase_grid = InterferometerConfig::uniform_phase_grid(static_cast<int>(c.integer("phase_points")));
    ic.input =
        c.choice("input_model") == "vacuum_mixture" ? InputModel::kVacuumMixture : InputModel::kPhaseAveragedCoherent;
    ic.epsilon = 1.0;
    const double v_ideal = visibility(run_interferometer(ic)[0]);
    ic.epsilon = eps;
    const auto fringes = run_interferometer(ic);
    const HarmonicFit d2 = fit_fringe(fringes[0]);
    const HarmonicFit d3 = fit_fringe(fringes[1]);
    const double offset = std::remainder(d3.phase - d2.phase, 2.0 * std::numbers::pi);

    std::vector<Cell> row = {eta,
                             analytic_gain(eta),
                             ideal.odds_gain,
                             lossy.odds_gain,
                             adjusted_gain(eta, m, eps),
                             lossy.mean_photon_gain,
                             v_ideal,
                             d2.visibility,
                             d2.residual,
                             std::abs(offset)};
    for (const auto& cand : linear_amp_visibility_reference(ic, analytic_gain(eta))) row.push_back(cand.visibility);
    const MeasuredRow* p = measured_row(eta);
    for (auto field : {&MeasuredRow::g2, &MeasuredRow::g2_err, &MeasuredRow::v, &MeasuredRow::v_err, &MeasuredRow::v_linear})
      row.push_back(opt(p, field));
    return row;
  };
  for (auto& row : parallel_map(static_cast<int>(etas.size()), threads, row_fn)) r.table.add_row(std::move(row));
  r.summary = {{"input_mean_photon", m}, {"epsilon", eps}, {"tau", c.real("tau")}};
  return r;
}

Report run_linearity(const Config& c, int threads) {
  const double eta = c.real("eta");
  const double eps = c.real("epsilon");
  const double lo = c.real("mean_min");
  const double hi = c.real("mean_max");
  if (hi < lo) throw ConfigError("mean_max must be >= mean_min", 0, "mean_max");
  const int n = static_cast<int>(c.integer("points"));
  const StageConfig stage{eta, c.real("kappa"), eps};
  Report r{"linearity", {}, {}};
  r.table.columns = {"input_mean_photon", "odds_gain", "mean_photon_gain", "one_photon_odds_per_input",
                     "one_photon_weight_per_input", "success_probability", "g2_theory", "g2_adjusted"};
  const std::function<std::vector<Cell>(int)> row_fn = [&](int i) {
    const double m = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    const DensityOperator in =
        phase_averaged_coherent(std::sqrt(m), coherent_cutoff(m, static_cast<int>(c.integer("cutoff"))));
    const StageGain g = measure_stage_gain(in, stage);
    const auto p = photon_distribution(g.output, 0);
    return std::vector<Cell>{m, g.odds_gain, g.mean_photon_gain, (p[1] / p[0]) / m, p[1] / m,
                             g.success_probability, analytic_gain(eta), adjusted_gain(eta, m, eps)};
  };
  double lo_odds = kInf;
  double hi_odds = -kInf;
  for (auto& row : parallel_map(n, threads, row_fn)) {
    const double v = std::get<double>(row[3]);
    lo_odds = std::min(lo_odds, v);
    hi_odds = std::max(hi_odds, v);
    r.table.add_row(std::move(row));
  }
  r.summary = {{"eta", eta}, {"epsilon", eps}, {"one_photon_odds_relative_spread", (hi_odds - lo_odds) / lo_odds}};
  return r;
}

Report run_fringe(const Config& c, int) {
  const InterferometerConfig ic = interferometer_from(c, true);
  Report r{"fringe", {}, {}};
  r.table.columns = {"branch", "phase", "click_probability", "mean_photon", "single_photon_probability"};
  for (const auto& f : run_interferometer(ic)) {
    const HarmonicFit fit = fit_fringe(f);
    const std::string b = to_string(f.branch);
    r.summary.emplace_back(b + "_visibility", fit.visibility);
    r.summary.emplace_back(b + "_fit_residual", fit.residual);
    r.summary.emplace_back(b + "_fit_phase", fit.phase);
    r.summary.emplace_back(b + "_herald_probability", f.herald_probability);
    for (const auto& p : f.points)
      r.table.add_row({b, p.phase, p.click_probability, p.mean_photon, p.single_photon_probability});
  }
  return r;
}

Report run_vis_tau(const Config& c, int threads) {
  const InterferometerConfig ic = interferometer_from(c, false);
  const double lo = c.real("tau_min");
  const double hi = c.real("tau_max");
  if (hi < lo) throw ConfigError("tau_max must be >= tau_min", 0, "tau_max");
  const int n = static_cast<int>(c.integer("tau_points"));
  std::vector<double> taus;
  for (int i = 0; i < n; ++i) taus.push_back(lo + (hi - lo) * i / (n - 1));
  const std::function<TauPoint(int)> fn = [&](int i) {
    return visibility_vs_tau(ic, {taus[static_cast<std::size_t>(i)]}).front();
  };
  Report r{"vis-tau", {}, {}};
  r.table.columns = {"tau", "visibility_d2", "visibility_d3"};
  double best = -1.0;
  double best_tau = lo;
  for (const auto& p : parallel_map(n, threads, fn)) {
    r.table.add_row({p.tau, p.visibility_d2, p.visibility_d3});
    if (p.visibility_d2 > best + 1e-12) {
      best = p.visibility_d2;
      best_tau = p.tau;
    }
  }
  r.summary = {{"sigma", ic.sigma}, {"argmax_tau", best_tau}, {"max_visibility", best}, {"one_minus_eta", 1.0 - ic.eta}};
  return r;
}

Report run_epr(const Config& c, int) {
  const double chi = c.real("chi");
  const double g = c.real("g");
  NlaConfig nc;
  nc.n_stages = static_cast<int>(c.integer("n_stages"));
  nc.eta = 1.0 / (1.0 + g * g);
  nc.cutoff = static_cast<int>(c.integer("cutoff"));
  nc.source_efficiency = c.real("source_efficiency");
  const EprMode mode = c.choice("mode") == "analytic" ? EprMode::kAnalytic : EprMode::kCircuit;
  const EprResult res = epr_distill(chi, nc, mode);
  const DensityOperator input = to_density(epr_state(SqueezeSpec{chi}, res.state.basis().cutoff(0)));
  Report r{"epr", {}, {}};
  r.table.columns = {"n", "amplitude_in", "amplitude_out", "ratio_out"};
  for (int n = 0; n <= res.state.basis().cutoff(0); ++n) {
    const Cell ratio = static_cast<std::size_t>(n) < res.ratios.size() ? Cell{res.ratios[static_cast<std::size_t>(n)]}
                                                                        : Cell{std::monostate{}};
    r.table.add_row({static_cast<long long>(n), std::sqrt(std::max(0.0, input.element({n, n}, {n, n}).real())),
                     std::sqrt(std::max(0.0, res.state.element({n, n}, {n, n}).real())), ratio});
  }
  r.summary = {{"chi", chi},
               {"g", g},
               {"mode", c.choice("mode")},
               {"n_stages", static_cast<long long>(nc.n_stages)},
               {"chi_prime", res.chi_prime},
               {"g_chi", g * chi},
               {"probability", res.probability},
               {"entropy_in", res.entropy_in},
               {"entropy_out", res.entropy_out}};
  return r;
}

Report run_bound(const Config& c, int threads) {
  struct Point {
    double alpha;
    double g;
    int n;
  };
  std::vector<Point> points;
  for (double g : c.reals("gains"))
    for (long long n : c.integers("n_stages"))
      for (double a : c.reals("alphas")) points.push_back({a, g, static_cast<int>(n)});
  const int cutoff = static_cast<int>(c.integer("cutoff"));
  const std::function<std::vector<Cell>(int)> fn = [&](int i) {
    const Point& p = points[static_cast<std::size_t>(i)];
    NlaConfig nc;
    nc.n_stages = p.n;
    nc.eta = 1.0 / (1.0 + p.g * p.g);
    nc.cutoff = cutoff;
    const double achieved = nla_full(Complex(p.alpha, 0.0), nc).probability;
    const double bound = distinguishability_bound(Complex(p.alpha, 0.0), p.g);
    const double analytic = recombined_output_analytic(Complex(p.alpha, 0.0), nc.eta, p.n, p.n).squared_norm();
    return std::vector<Cell>{p.alpha,
                             p.g,
                             static_cast<long long>(p.n),
                             bound,
                             achieved,
                             analytic,
                             success_probability_analytic(Complex(p.alpha, 0.0), p.g, p.n),
                             achieved <= bound};
  };
  Report r{"bound", {}, {}};
  r.table.columns = {"alpha", "g", "n_stages", "bound", "achieved", "analytic_norm", "large_n_limit", "within_bound"};
  bool all = true;
  for (auto& row : parallel_map(static_cast<int>(points.size()), threads, fn)) {
    all = all && std::get<bool>(row.back());
    r.table.add_row(std::move(row));
  }
  r.summary = {{"configurations", static_cast<long long>(points.size())}, {"all_within_bound", all}};
  return r;
}

const std::map<std::string, std::vector<KeySpec>>& schemas() {
  static const std::map<std::string, std::vector<KeySpec>> s = [] {
    std::map<std::string, std::vector<KeySpec>> m;
    KeySpec sigma_auto{"sigma", ValueKind::kRealOrAuto, "auto", "reference-arm fraction, auto = 1 - eta", 0, 1,
                       false, true};
    m["table1"] = {
        {"etas", ValueKind::kRealList, "1/3, 1/4, 1/5, 1/2", "stage eta per row", 0, 1, true, true},
        real_key("input_mean_photon", "0.02", 0, 1, true, false, "|alpha'|^2 entering the stage"),
        real_key("epsilon", "0.8", 0, 1, true, false, "ancilla efficiency for the lossy columns"),
        real_key("kappa", "0.5", 0, 1, false, false, "signal/ancilla mixing reflectivity"),
        sigma_auto,
        real_key("tau", "0.5", 0, 1, false, false, "fraction of the reference arm reaching D1"),
        int_key("phase_points", "24", 3, 100000, "phase grid size"),
        input_model_key(),
        int_key("gain_cutoff", "8", 2, 40, "cutoff of the coherent input used for the gain columns"),
    };
    m["linearity"] = {
        real_key("eta", "0.25", 0, 1, true, true, "stage eta"),
        real_key("kappa", "0.5", 0, 1, false, false, "signal/ancilla mixing reflectivity"),
        real_key("epsilon", "1", 0, 1, true, false, "ancilla efficiency"),
        real_key("mean_min", "1e-4", 0, 1, true, false, "smallest |alpha'|^2"),
        real_key("mean_max", "1e-2", 0, 1, true, false, "largest |alpha'|^2"),
        int_key("points", "9", 1, 10000, "log-spaced grid size"),
        int_key("cutoff", "0", 0, 40, "input cutoff, 0 = automatic"),
    };
    m["fringe"] = interferometer_keys("0.8", true);
    m["vis-tau"] = interferometer_keys("0.5", false);
    m["vis-tau"].push_back(real_key("tau_min", "0", 0, 1, false, false, "first tau"));
    m["vis-tau"].push_back(real_key("tau_max", "1", 0, 1, false, false, "last tau"));
    m["vis-tau"].push_back(int_key("tau_points", "101", 2, 100001, "tau grid size"));
    KeySpec mode{"mode", ValueKind::kChoice, "analytic", "analytic (large-N weights) or circuit"};
    mode.choices = {"analytic", "circuit"};
    m["epr"] = {
        real_key("chi", "0.3", 0, 1, false, true, "EPR squeezing parameter"),
        real_key("g", "2", 1, kInf, false, true, "amplitude gain"),
        int_key("n_stages", "1", 1, 8, "number of stages"),
        mode,
        int_key("cutoff", "0", 0, 60, "per-arm cutoff, 0 = automatic"),
        real_key("source_efficiency", "1", 0, 1, true, false, "ancilla source efficiency 1 - gamma"),
    };
    m["bound"] = {
        {"alphas", ValueKind::kRealList, "0.05, 0.1, 0.2, 0.5, 1", "coherent amplitudes", 0, 3},
        {"gains", ValueKind::kRealList, "2", "amplitude gains", 1, 10},
        {"n_stages", ValueKind::kIntegerList, "1, 2, 3", "stage counts", 1, 6},
        int_key("cutoff", "0", 0, 30, "per-mode cutoff, 0 = automatic"),
    };
    return m;
  }();
  return s;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"table1", "linearity", "fringe", "vis-tau", "epr", "bound"};
  return names;
}

const std::vector<KeySpec>& experiment_schema(const std::string& name) {
  const auto it = schemas().find(name);
  if (it == schemas().end()) throw ConfigError("unknown experiment '" + name + "'");
  return it->second;
}

Report run_experiment(const std::string& name, const Config& config, int threads) {
  experiment_schema(name);
  if (name == "table1") return run_table1(config, threads);
  if (name == "linearity") return run_linearity(config, threads);
  if (name == "fringe") return run_fringe(config, threads);
  if (name == "vis-tau") return run_vis_tau(config, threads);
  if (name == "epr") return run_epr(config, threads);
  return run_bound(config, threads);
}

int parse_thread_count(const char* value) {
  if (value == nullptr || *value == '\0') return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::string s(value);
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || n < 1 || n > 1024) throw ConfigError("SIM_THREADS must be an integer in [1, 1024], got '" + s + "'");
  return static_cast<int>(n);
}

}  // namespace nlasim
