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

#ifndef NLASIM_AMPLIFIER_HPP
#define NLASIM_AMPLIFIER_HPP

#include <vector>

#include "nlasim/fock.hpp"

namespace nlasim {

/// One generalized quantum-scissors stage.
///
/// Circuit (modes: signal s, ancilla c, auxiliary v): a single photon in c
/// (present with probability `ancilla_efficiency`) is split at reflectivity
/// `eta` into c and v; s and v are mixed at `kappa`; success is one photon in
/// s and none in v (branch D2) or the reverse (branch D3). The amplified state
/// leaves in c, which replaces s in the caller's mode layout.
struct StageConfig {
  double eta = 0.25;
  double kappa = 0.5;
  double ancilla_efficiency = 1.0;

  void validate() const;
  /// Intensity gain (1 - eta) / eta.
  double gain() const;
};

enum class Branch { kD2, kD3 };

const char* to_string(Branch branch);

template <typename State>
struct StageOutcome {
  Branch branch;
  State state;  // normalized unless probability == 0
  double probability;
};

/// (1 - eta) / eta. Requires 0 < eta < 1.
double analytic_gain(double eta);

/// Unnormalized conditional state for one branch, with the ancilla prepared
/// in |1> (`ancilla_photon`) or |0>. Squared norm = branch probability.
FockState apply_stage(const FockState& joint, int mode, const StageConfig& config, Branch branch,
                      bool ancilla_photon);
/// Unnormalized conditional operator with the lossy ancilla
/// eps |1><1| + (1 - eps) |0><0|. Trace = branch probability.
DensityOperator apply_stage(const DensityOperator& joint, int mode, const StageConfig& config, Branch branch);

/// The stage circuit with its detectors ignored (trace preserved).
DensityOperator apply_stage_unheralded(const DensityOperator& joint, int mode, const StageConfig& config);

/// Both branches of a stage acting on a single-mode input. The pure overload
/// requires an ideal ancilla.
std::vector<StageOutcome<FockState>> amplifier_stage(const FockState& input, const StageConfig& config);
std::vector<StageOutcome<DensityOperator>> amplifier_stage(const DensityOperator& input, const StageConfig& config);
/// Stage on `mode` of a multimode state.
std::vector<StageOutcome<FockState>> amplifier_stage(const FockState& joint, int mode, const StageConfig& config);
std::vector<StageOutcome<DensityOperator>> amplifier_stage(const DensityOperator& joint, int mode,
                                                           const StageConfig& config);

/// Feedforward: a pi phase shift on the output mode of D3 outcomes.
StageOutcome<FockState> feedforward_correct(const StageOutcome<FockState>& outcome, int mode = 0);
StageOutcome<DensityOperator> feedforward_correct(const StageOutcome<DensityOperator>& outcome, int mode = 0);

/// Gain of one stage on a single-mode input, both branches combined after
/// feedforward.
struct StageGain {
  /// (p1/p0)_out / (p1/p0)_in: the small-signal intensity gain. Exactly
  /// (1-eta)/eta for an ideal stage at any input.
  double odds_gain;
  /// <n>_out / <n>_in: the count-ratio gain at finite input; rolls off once
  /// |g alpha'| is no longer small.
  double mean_photon_gain;
  double success_probability;
  DensityOperator output;
};

StageGain measure_stage_gain(const DensityOperator& input, const StageConfig& config);

/// Full amplifier: 2N-port split, N feedforward-corrected stages, recombination,
/// vacuum herald on the N-1 auxiliary outputs.
struct NlaConfig {
  int n_stages = 1;
  double eta = 0.2;
  /// Per-mode cutoff for coherent inputs; 0 selects default_cutoff().
  int cutoff = 0;
  /// Ancilla photon source efficiency 1 - gamma.
  double source_efficiency = 1.0;
  double kappa = 0.5;

  void validate() const;
  double gain() const { return analytic_gain(eta); }
  StageConfig stage() const { return {eta, kappa, source_efficiency}; }
};

struct NlaResult {
  DensityOperator state;  // normalized unless probability == 0
  double probability;
};

/// max(4, ceil(2 g |alpha|) + 3).
int default_cutoff(double alpha_magnitude, double amplitude_gain);

NlaResult nla_full(const FockState& joint, int mode, const NlaConfig& config);
/// Coherent input |alpha> at config.cutoff (or the default cutoff).
NlaResult nla_full(Complex alpha, const NlaConfig& config);

/// e^{-|a|^2/2} eta^{N/2} (1 + g a a+/N)^N |0>, truncated at `cutoff`.
FockState recombined_output_analytic(Complex alpha, double eta, int n_stages, int cutoff);

/// eta^N e^{-(1 - g^2)|alpha|^2} with eta = 1/(1 + g^2).
double success_probability_analytic(Complex alpha, double amplitude_gain, int n_stages);

/// Largest success probability compatible with non-increasing
/// distinguishability of |0> and |alpha>: (1 - e^{-|a|^2}) / (1 - e^{-|g a|^2}).
double distinguishability_bound(Complex alpha, double amplitude_gain);

/// Gain with a lossy single-photon ancilla of efficiency eps:
/// ((1-eta)/eta) / (1 + |alpha'|^2 (1 - eps) / (eps eta)).
double adjusted_gain(double eta, double input_mean_photon, double epsilon);

/// Closed-form output of the N-stage device when each ancilla source fires
/// with probability 1 - gamma (binomial mixture over misfires).
NlaResult lossy_source_output(Complex alpha, const NlaConfig& config);

/// (eta / |alpha|^2) / (gamma / (1 - gamma)). Values well above one (10 is the
/// conventional threshold) mean misfire mixing is negligible. +inf at gamma = 0.
double mixing_condition_check(double gamma, double eta, double alpha_magnitude);

}  // namespace nlasim

#endif  // NLASIM_AMPLIFIER_HPP
