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

#include "nlasim/amplifier.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nlasim/detection.hpp"
#include "nlasim/optics.hpp"

namespace nlasim {
namespace {

HeraldPattern branch_pattern(int signal_mode, int aux_mode, Branch branch) {
  const bool d2 = branch == Branch::kD2;
  return {{{signal_mode, d2 ? 1 : 0, 1.0}, {aux_mode, d2 ? 0 : 1, 1.0}}};
}

// Order that moves the last mode back to position `mode`.
std::vector<int> reinsert_last(int num_modes, int mode) {
  std::vector<int> order;
  for (int k = 0; k < num_modes; ++k) order.push_back(k < mode ? k : (k == mode ? num_modes - 1 : k - 1));
  return order;
}

int checked_signal_cutoff(const Basis& basis, int mode) {
  basis.check_mode(mode);
  const int cs = basis.cutoff(mode);
  if (cs < 1) throw std::invalid_argument("amplifier stage input mode needs cutoff >= 1");
  return cs;
}

template <typename State>
State run_stage_circuit(const State& joint, int mode, const StageConfig& config, Branch branch, const State& ancilla) {
  const int cs = checked_signal_cutoff(joint.basis(), mode);
  // The detected modes can receive every input photon plus the ancilla photon,
  // so they get one extra level and no amplitude is truncated.
  State s = tensor(joint.reshaped(joint.basis().with_cutoff(mode, cs + 1)), ancilla);
  const int c = s.num_modes() - 2;
  const int v = s.num_modes() - 1;
  s = beam_splitter(s, c, v, {config.eta, 0.0});
  s = beam_splitter(s, mode, v, {config.kappa, 0.0});
  s = herald_unnormalized(s, branch_pattern(mode, v, branch));
  s = permute_modes(s, reinsert_last(s.num_modes(), mode));
  return s.reshaped(s.basis().with_cutoff(mode, cs));
}

template <typename State>
double weight(const State& s) {
  if constexpr (std::is_same_v<State, FockState>) {
    return s.squared_norm();
  } else {
    return s.trace();
  }
}

template <typename State>
StageOutcome<State> make_outcome(Branch branch, State unnormalized) {
  const double p = weight(unnormalized);
  if (p <= 0.0) return {branch, std::move(unnormalized), 0.0};
  return {branch, unnormalized.normalized(), p};
}

FockState ancilla_state(int aux_cutoff, bool photon) {
  const Basis b({1, aux_cutoff});
  const int occ[] = {photon ? 1 : 0, 0};
  return FockState::basis_state(b, occ);
}

DensityOperator ancilla_density(int aux_cutoff, double eps) {
  const Eigen::MatrixXcd one = to_density(ancilla_state(aux_cutoff, true)).matrix();
  const Eigen::MatrixXcd zero = to_density(ancilla_state(aux_cutoff, false)).matrix();
  return {Basis({1, aux_cutoff}), eps * one + (1.0 - eps) * zero};
}

std::vector<double> diagonal(const DensityOperator& rho) {
  std::vector<double> d(rho.dim());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  return d;
}

// Coefficients of (1 + x a+)^m |0> in the number basis, truncated at cutoff.
Eigen::VectorXcd binomial_polynomial_state(Complex x, int m, int cutoff) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
  double binom = 1.0;
  Complex xp = 1.0;
  double sqrt_fact = 1.0;
  for (int j = 0; j <= std::min(m, cutoff); ++j) {
    if (j > 0) {
      binom *= static_cast<double>(m - j + 1) / j;
      xp *= x;
      sqrt_fact *= std::sqrt(static_cast<double>(j));
    }
    v(j) = binom * xp * sqrt_fact;
  }
  return v;
}

}  // namespace

const char* to_string(Branch branch) { return branch == Branch::kD2 ? "D2" : "D3"; }

void StageConfig::validate() const {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("stage eta must lie in (0,1)");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::invalid_argument("stage kappa must lie in [0,1]");
  if (!(ancilla_efficiency > 0.0 && ancilla_efficiency <= 1.0))
    throw std::invalid_argument("ancilla efficiency must lie in (0,1]");
}

double StageConfig::gain() const { return analytic_gain(eta); }

double analytic_gain(double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  return (1.0 - eta) / eta;
}

FockState apply_stage(const FockState& joint, int mode, const StageConfig& config, Branch branch,
                      bool ancilla_photon) {
  config.validate();
  const int cs = checked_signal_cutoff(joint.basis(), mode);
  return run_stage_circuit(joint, mode, config, branch, ancilla_state(cs + 1, ancilla_photon));
}

DensityOperator apply_stage(const DensityOperator& joint, int mode, const StageConfig& config, Branch branch) {
  config.validate();
  const int cs = checked_signal_cutoff(joint.basis(), mode);
  const DensityOperator anc = ancilla_density(cs + 1, config.ancilla_efficiency);
  return run_stage_circuit(joint, mode, config, branch, anc);
}

DensityOperator apply_stage_unheralded(const DensityOperator& joint, int mode, const StageConfig& config) {
  config.validate();
  const int cs = checked_signal_cutoff(joint.basis(), mode);
  const DensityOperator anc = ancilla_density(cs + 1, config.ancilla_efficiency);
  DensityOperator s = tensor(joint.reshaped(joint.basis().with_cutoff(mode, cs + 1)), anc);
  const int c = s.num_modes() - 2;
  const int v = s.num_modes() - 1;
  s = beam_splitter(s, c, v, {config.eta, 0.0});
  s = beam_splitter(s, mode, v, {config.kappa, 0.0});
  s = partial_trace(s, {mode, v});
  s = permute_modes(s, reinsert_last(s.num_modes(), mode));
  return s.reshaped(s.basis().with_cutoff(mode, cs));
}

std::vector<StageOutcome<FockState>> amplifier_stage(const FockState& joint, int mode, const StageConfig& config) {
  if (config.ancilla_efficiency != 1.0)
    throw std::invalid_argument("a lossy ancilla mixes the output; use the DensityOperator overload");
  std::vector<StageOutcome<FockState>> out;
  for (Branch b : {Branch::kD2, Branch::kD3}) out.push_back(make_outcome(b, apply_stage(joint, mode, config, b, true)));
  return out;
}

std::vector<StageOutcome<DensityOperator>> amplifier_stage(const DensityOperator& joint, int mode,
                                                           const StageConfig& config) {
  std::vector<StageOutcome<DensityOperator>> out;
  for (Branch b : {Branch::kD2, Branch::kD3}) out.push_back(make_outcome(b, apply_stage(joint, mode, config, b)));
  return out;
}

std::vector<StageOutcome<FockState>> amplifier_stage(const FockState& input, const StageConfig& config) {
  if (input.num_modes() != 1) throw std::invalid_argument("single-mode overload needs a one-mode input");
  return amplifier_stage(input, 0, config);
}

std::vector<StageOutcome<DensityOperator>> amplifier_stage(const DensityOperator& input, const StageConfig& config) {
  if (input.num_modes() != 1) throw std::invalid_argument("single-mode overload needs a one-mode input");
  return amplifier_stage(input, 0, config);
}

StageOutcome<FockState> feedforward_correct(const StageOutcome<FockState>& outcome, int mode) {
  if (outcome.branch == Branch::kD2) return outcome;
  return {outcome.branch, phase_shift(outcome.state, mode, std::numbers::pi), outcome.probability};
}

StageOutcome<DensityOperator> feedforward_correct(const StageOutcome<DensityOperator>& outcome, int mode) {
  if (outcome.branch == Branch::kD2) return outcome;
  return {outcome.branch, phase_shift(outcome.state, mode, std::numbers::pi), outcome.probability};
}

StageGain measure_stage_gain(const DensityOperator& input, const StageConfig& config) {
  if (input.num_modes() != 1) throw std::invalid_argument("measure_stage_gain needs a one-mode input");
  Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(input.dim()),
                                                     static_cast<Eigen::Index>(input.dim()));
  double p = 0.0;
  for (const auto& o : amplifier_stage(input, config)) {
    if (o.probability <= 0.0) continue;
    combined += o.probability * feedforward_correct(o).state.matrix();
    p += o.probability;
  }
  if (p <= 0.0) throw std::domain_error("stage never heralds for this input");
  DensityOperator out(input.basis(), combined / p);
  const auto din = diagonal(input);
  const auto dout = diagonal(out);
  const double odds = (dout[1] / dout[0]) / (din[1] / din[0]);
  const double mean_gain = mean_photon(out, 0) / mean_photon(input, 0);
  return {odds, mean_gain, p, std::move(out)};
}

void NlaConfig::validate() const {
  if (n_stages < 1) throw std::invalid_argument("NLA needs at least one stage");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("NLA eta must lie in (0,1)");
  if (cutoff < 0) throw std::invalid_argument("NLA cutoff must be non-negative");
  if (!(source_efficiency > 0.0 && source_efficiency <= 1.0))
    throw std::invalid_argument("source efficiency 1-gamma must lie in (0,1] (gamma in [0,1))");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::invalid_argument("NLA kappa must lie in [0,1]");
}

int default_cutoff(double alpha_magnitude, double amplitude_gain) {
  return std::max(4, static_cast<int>(std::ceil(2.0 * amplitude_gain * alpha_magnitude)) + 3);
}

NlaResult nla_full(const FockState& joint, int mode, const NlaConfig& config) {
  config.validate();
  const StageConfig stage = config.stage();
  const int n = config.n_stages;
  const int first_new = joint.num_modes();
  std::vector<int> ports{mode};
  for (int k = 1; k < n; ++k) ports.push_back(first_new + k - 1);

  // Every (branch, ancilla-occupancy) record of every stage is a distinct
  // classical outcome; they are kept as an ensemble of pure branches and
  // summed incoherently at the end.
  std::vector<FockState> ensemble{multiport_split(joint, mode, n)};
  const double eps = config.source_efficiency;
  for (int port : ports) {
    std::vector<FockState> next;
    for (const auto& psi : ensemble)
      for (Branch b : {Branch::kD2, Branch::kD3})
        for (bool photon : {true, false}) {
          const double w = photon ? eps : 1.0 - eps;
          if (w <= 0.0) continue;
          FockState out = apply_stage(psi, port, stage, b, photon).scaled(std::sqrt(w));
          if (out.squared_norm() == 0.0) continue;
          if (b == Branch::kD3) out = phase_shift(out, port, std::numbers::pi);
          next.push_back(std::move(out));
        }
    ensemble = std::move(next);
  }

  HeraldPattern vacuum_ports;
  for (int k = 1; k < n; ++k) vacuum_ports.conditions.push_back({ports[static_cast<std::size_t>(k)], 0, 1.0});
  Basis out_basis = joint.basis();
  const auto d = static_cast<Eigen::Index>(out_basis.dim());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& psi : ensemble) {
    const FockState out = herald_unnormalized(multiport_recombine(psi, ports), vacuum_ports);
    rho += out.amplitudes() * out.amplitudes().adjoint();
  }
  DensityOperator result(std::move(out_basis), std::move(rho));
  const double p = result.trace();
  if (p <= 0.0) return {std::move(result), 0.0};
  return {result.normalized(), p};
}

NlaResult nla_full(Complex alpha, const NlaConfig& config) {
  config.validate();
  const int cutoff = config.cutoff > 0 ? config.cutoff : default_cutoff(std::abs(alpha), std::sqrt(config.gain()));
  return nla_full(coherent_state(alpha, cutoff), 0, config);
}

FockState recombined_output_analytic(Complex alpha, double eta, int n_stages, int cutoff) {
  const double g = std::sqrt(analytic_gain(eta));
  if (n_stages < 1) throw std::invalid_argument("n_stages must be >= 1");
  Eigen::VectorXcd v = binomial_polynomial_state(g * alpha / static_cast<double>(n_stages), n_stages, cutoff);
  v *= std::exp(-std::norm(alpha) / 2.0) * std::pow(eta, n_stages / 2.0);
  return FockState(Basis::uniform(1, cutoff), std::move(v));
}

double success_probability_analytic(Complex alpha, double amplitude_gain, int n_stages) {
  if (n_stages < 1) throw std::invalid_argument("n_stages must be >= 1");
  const double g2 = amplitude_gain * amplitude_gain;
  const double eta = 1.0 / (1.0 + g2);
  return std::pow(eta, n_stages) * std::exp(-(1.0 - g2) * std::norm(alpha));
}

double distinguishability_bound(Complex alpha, double amplitude_gain) {
  const double a2 = std::norm(alpha);
  const double g2 = amplitude_gain * amplitude_gain;
  if (g2 <= 0.0) throw std::invalid_argument("amplitude gain must be non-zero");
  if (a2 == 0.0) return 1.0 / g2;
  return std::expm1(-a2) / std::expm1(-g2 * a2);
}

double adjusted_gain(double eta, double input_mean_photon, double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in (0,1]");
  if (!(input_mean_photon >= 0.0)) throw std::invalid_argument("input mean photon must be non-negative");
  return analytic_gain(eta) / (1.0 + input_mean_photon * (1.0 - epsilon) / (epsilon * eta));
}

NlaResult lossy_source_output(Complex alpha, const NlaConfig& config) {
  config.validate();
  const int n = config.n_stages;
  const double gamma = 1.0 - config.source_efficiency;
  const double eta = config.eta;
  const double g = std::sqrt(config.gain());
  const int cutoff = config.cutoff > 0 ? config.cutoff : default_cutoff(std::abs(alpha), g);
  const double a2 = std::norm(alpha);
  const Complex x = g * alpha / static_cast<double>(n);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  double binom = 1.0;
  for (int misfires = 0; misfires <= n; ++misfires) {
    if (misfires > 0) binom *= static_cast<double>(n - misfires + 1) / misfires;
    const double w = binom * std::pow(1.0 - gamma, n - misfires) * std::pow(gamma, misfires) *
                     std::pow(a2 / n, misfires) * std::exp(-a2) * std::pow(eta, n - misfires);
    if (w == 0.0) continue;
    const Eigen::VectorXcd phi = binomial_polynomial_state(x, n - misfires, cutoff);
    rho += w * phi * phi.adjoint();
  }
  DensityOperator result(Basis::uniform(1, cutoff), std::move(rho));
  const double p = result.trace();
  return {result.normalized(), p};
}

double mixing_condition_check(double gamma, double eta, double alpha_magnitude) {
  if (!(gamma >= 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma must lie in [0,1)");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("eta must lie in (0,1)");
  if (gamma == 0.0) return std::numeric_limits<double>::infinity();
  return (eta / (alpha_magnitude * alpha_magnitude)) / (gamma / (1.0 - gamma));
}

}  // namespace nlasim
