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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "nlasim/analysis.hpp"
#include "nlasim/optics.hpp"

namespace nlasim {
namespace {

constexpr double kSourceTailTolerance = 1e-12;

struct Arms {
  DensityOperator state;
  double probability;
};

int source_cutoff(const InterferometerConfig& config) {
  if (config.input == InputModel::kVacuumMixture) return 1;
  if (config.cutoff > 0) return config.cutoff;
  const double mag = std::sqrt(config.source_mean_photon());
  int c = 2;
  while (coherent_tail_weight(mag, c) > kSourceTailTolerance) ++c;
  return c;
}

Arms heralded_arms(const InterferometerConfig& config, FringeBranch branch) {
  const DensityOperator joint = interferometer_input_arms(config);
  if (branch == FringeBranch::kUnconditioned) return {apply_stage_unheralded(joint, 0, config.stage()), 1.0};
  const Branch b = branch == FringeBranch::kD2 ? Branch::kD2 : Branch::kD3;
  const DensityOperator out = apply_stage(joint, 0, config.stage(), b);
  const double p = out.trace();
  if (p <= 0.0) throw std::domain_error("herald probability is zero for this configuration");
  return {out.normalized(), p};
}

FringeData fringe_from_arms(const Arms& arms, FringeBranch branch, const InterferometerConfig& config) {
  FringeData data{branch, arms.probability, {}};
  for (double phi : config.phase_grid) {
    const std::vector<double> dist = output_port_distribution(arms.state, 0, 1, {config.tau, phi});
    double mean = 0.0;
    for (std::size_t n = 0; n < dist.size(); ++n) mean += static_cast<double>(n) * dist[n];
    const double single = dist.size() > 1 ? dist[1] : 0.0;
    data.points.push_back({phi, 1.0 - dist[0], mean, single});
  }
  return data;
}

double signal_of(const FringePoint& p, FringeSignal signal) {
  switch (signal) {
    case FringeSignal::kClick:
      return p.click_probability;
    case FringeSignal::kMeanPhoton:
      return p.mean_photon;
    case FringeSignal::kSinglePhoton:
      return p.single_photon_probability;
  }
  return 0.0;
}

}  // namespace

std::vector<double> InterferometerConfig::uniform_phase_grid(int n) {
  if (n < 1) throw std::invalid_argument("phase grid needs at least one point");
  std::vector<double> grid;
  for (int k = 0; k < n; ++k) grid.push_back(2.0 * std::numbers::pi * k / n);
  return grid;
}

void InterferometerConfig::validate() const {
  if (!(input_mean_photon > 0.0)) throw std::invalid_argument("input_mean_photon must be positive");
  if (!(sigma >= 0.0 && sigma < 1.0)) throw std::invalid_argument("sigma must lie in [0,1)");
  if (!(tau >= 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in [0,1]");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::invalid_argument("delta must lie in [0,1]");
  if (phase_grid.size() < 3) throw std::invalid_argument("phase_grid needs at least three points");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  if (input == InputModel::kVacuumMixture && source_mean_photon() > 1.0)
    throw std::invalid_argument("vacuum-mixture source needs input_mean_photon / (1 - sigma) <= 1");
  stage().validate();
}

const char* to_string(FringeBranch branch) {
  switch (branch) {
    case FringeBranch::kD2:
      return "D2";
    case FringeBranch::kD3:
      return "D3";
    case FringeBranch::kUnconditioned:
      return "unconditioned";
  }
  return "";
}

DensityOperator interferometer_input_arms(const InterferometerConfig& config) {
  config.validate();
  const int c = source_cutoff(config);
  const DensityOperator source = config.input == InputModel::kVacuumMixture
                                     ? vacuum_mixture(config.source_mean_photon(), c)
                                     : phase_averaged_coherent(std::sqrt(config.source_mean_photon()), c);
  const DensityOperator joint = tensor(source, to_density(FockState::vacuum(Basis::uniform(1, c))));
  return beam_splitter(joint, 0, 1, {config.sigma, 0.0});
}

DensityOperator interferometer_arms(const InterferometerConfig& config, FringeBranch branch) {
  return heralded_arms(config, branch).state;
}

std::vector<FringeData> run_interferometer(const InterferometerConfig& config) {
  config.validate();
  std::vector<FringeData> out;
  if (!config.heralded) {
    out.push_back(fringe_from_arms(heralded_arms(config, FringeBranch::kUnconditioned),
                                   FringeBranch::kUnconditioned, config));
    return out;
  }
  for (FringeBranch b : {FringeBranch::kD2, FringeBranch::kD3})
    out.push_back(fringe_from_arms(heralded_arms(config, b), b, config));
  return out;
}

HarmonicFit fit_harmonic(const std::vector<double>& phases, const std::vector<double>& values) {
  if (phases.size() != values.size()) throw std::invalid_argument("phases and values differ in length");
  if (phases.size() < 3) throw std::invalid_argument("harmonic fit needs at least three points");
  const auto n = static_cast<Eigen::Index>(phases.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double phi = phases[static_cast<std::size_t>(i)];
    a.row(i) << 1.0, std::cos(phi), std::sin(phi);
    y(i) = values[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d x = a.colPivHouseholderQr().solve(y);
  const double amplitude = std::hypot(x(1), x(2));
  const double residual = std::sqrt((a * x - y).squaredNorm() / static_cast<double>(n));
  const double vis = x(0) > 0.0 ? amplitude / x(0) : 0.0;
  return {x(0), amplitude, std::atan2(-x(2), x(1)), vis, residual};
}

HarmonicFit fit_fringe(const FringeData& fringe, FringeSignal signal) {
  std::vector<double> phases;
  std::vector<double> values;
  for (const auto& p : fringe.points) {
    phases.push_back(p.phase);
    values.push_back(signal_of(p, signal));
  }
  return fit_harmonic(phases, values);
}

double visibility(const FringeData& fringe, FringeSignal signal) { return fit_fringe(fringe, signal).visibility; }

std::vector<TauPoint> visibility_vs_tau(const InterferometerConfig& config, const std::vector<double>& taus) {
  config.validate();
  const Arms d2 = heralded_arms(config, FringeBranch::kD2);
  const Arms d3 = heralded_arms(config, FringeBranch::kD3);
  std::vector<TauPoint> out;
  for (double tau : taus) {
    InterferometerConfig c = config;
    c.tau = tau;
    c.validate();
    out.push_back({tau, visibility(fringe_from_arms(d2, FringeBranch::kD2, c)),
                   visibility(fringe_from_arms(d3, FringeBranch::kD3, c))});
  }
  return out;
}

std::vector<LinearAmpCandidate> linear_amp_visibility_reference(const InterferometerConfig& config, double gain) {
  config.validate();
  const DensityOperator amplified = linear_amplifier_channel(interferometer_input_arms(config), 0, gain);
  const FringeData fringe = fringe_from_arms({amplified, 1.0}, FringeBranch::kUnconditioned, config);
  const ConcurrenceInputs sub = concurrence_inputs(amplified, 0.0, ConcurrenceNormalization::kAbsolute);
  const double coherence = sub.p10 + sub.p01 > 0.0 ? 2.0 * sub.d_mag / (sub.p10 + sub.p01) : 0.0;
  return {
      {"mean_photon_fringe", visibility(fringe, FringeSignal::kMeanPhoton)},
      {"click_fringe", visibility(fringe, FringeSignal::kClick)},
      {"single_photon_fringe", visibility(fringe, FringeSignal::kSinglePhoton)},
      {"subspace_coherence", coherence},
  };
}

}  // namespace nlasim
