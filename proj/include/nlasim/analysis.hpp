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

#ifndef NLASIM_ANALYSIS_HPP
#define NLASIM_ANALYSIS_HPP

#include <string>
#include <vector>

#include "nlasim/amplifier.hpp"
#include "nlasim/fock.hpp"

namespace nlasim {

enum class InputModel {
  /// (1-k)|0><0| + k|1><1|, the single-photon-or-vacuum source.
  kVacuumMixture,
  kPhaseAveragedCoherent,
};

/// Two-arm interferometer around one amplifier stage.
///
/// The source is split at `sigma` (the fraction sent to the reference arm);
/// the signal arm passes through the stage, the reference arm picks up phase
/// phi, and the two are recombined with fraction `tau` of the reference arm
/// reaching detector D1.
struct InterferometerConfig {
  /// Mean photon number entering the stage, |alpha'|^2.
  double input_mean_photon = 0.02;
  double sigma = 0.8;
  double tau = 0.5;
  double eta = 0.2;
  double kappa = 0.5;
  double epsilon = 1.0;
  std::vector<double> phase_grid = uniform_phase_grid(24);
  bool heralded = true;
  /// Input-preparation splitting. Informational only: the source mean is set
  /// directly from input_mean_photon.
  double delta = 0.0;
  InputModel input = InputModel::kVacuumMixture;
  /// Source cutoff for coherent inputs; 0 picks one with tail below 1e-12.
  int cutoff = 0;

  void validate() const;
  StageConfig stage() const { return {eta, kappa, epsilon}; }
  double source_mean_photon() const { return input_mean_photon / (1.0 - sigma); }

  /// n points evenly spaced on [0, 2 pi).
  static std::vector<double> uniform_phase_grid(int n);
};

enum class FringeBranch { kD2, kD3, kUnconditioned };

const char* to_string(FringeBranch branch);

struct FringePoint {
  double phase;
  /// P(D1 clicks | herald).
  double click_probability;
  /// Mean photon number at D1 given the herald.
  double mean_photon;
  /// P(D1 registers exactly one photon | herald).
  double single_photon_probability;
};

struct FringeData {
  FringeBranch branch;
  /// Probability of the herald itself (1 when unconditioned).
  double herald_probability;
  std::vector<FringePoint> points;
};

/// D2 and D3 fringes when config.heralded, otherwise the unconditioned one.
std::vector<FringeData> run_interferometer(const InterferometerConfig& config);

/// State of (stage output, reference arm) before recombination, normalized.
DensityOperator interferometer_arms(const InterferometerConfig& config, FringeBranch branch);
/// State of (signal arm, reference arm) right after the source split.
DensityOperator interferometer_input_arms(const InterferometerConfig& config);

/// Least-squares fit y = a + b cos(phi) + c sin(phi).
struct HarmonicFit {
  double offset;
  double amplitude;
  /// Fitted curve is offset + amplitude cos(phi + phase).
  double phase;
  /// amplitude / offset, i.e. (max - min) / (max + min) of the fitted curve.
  double visibility;
  /// Root-mean-square residual of the fit.
  double residual;
};

HarmonicFit fit_harmonic(const std::vector<double>& phases, const std::vector<double>& values);

enum class FringeSignal { kClick, kMeanPhoton, kSinglePhoton };

double visibility(const FringeData& fringe, FringeSignal signal = FringeSignal::kClick);
HarmonicFit fit_fringe(const FringeData& fringe, FringeSignal signal = FringeSignal::kClick);

struct TauPoint {
  double tau;
  double visibility_d2;
  double visibility_d3;
};

/// Heralded visibility for each tau, all other settings from `config`.
std::vector<TauPoint> visibility_vs_tau(const InterferometerConfig& config, const std::vector<double>& taus);

enum class ConcurrenceNormalization {
  /// Probabilities relative to the whole heralded state.
  kAbsolute,
  /// Renormalized inside span{|0>,|1>} x span{|0>,|1>}.
  kPhotonSubspace,
};

const char* to_string(ConcurrenceNormalization mode);

struct ConcurrenceInputs {
  double p00 = 0.0;
  double p10 = 0.0;
  double p01 = 0.0;
  double p11 = 0.0;
  double d_mag = 0.0;
  ConcurrenceNormalization normalization = ConcurrenceNormalization::kAbsolute;

  /// p11 is an independently estimated accidental rate and enters the sum
  /// check only in the subspace mode.
  void validate() const;
};

/// 2 max(|d| - sqrt(p00 p11), 0).
double concurrence(const ConcurrenceInputs& inputs);

/// Reads p00, p10, p01 and |d| = |<10|rho|01>| off a two-mode state, with
/// p11 replaced by `accidental_p11`.
ConcurrenceInputs concurrence_inputs(const DensityOperator& two_arm, double accidental_p11,
                                     ConcurrenceNormalization normalization);

struct ConcurrenceReport {
  ConcurrenceInputs input_absolute;
  ConcurrenceInputs output_absolute;
  ConcurrenceInputs input_subspace;
  ConcurrenceInputs output_subspace;
  double c_in_absolute;
  double c_out_absolute;
  double c_in_subspace;
  double c_out_subspace;
  /// First-order estimate from arm populations alone: p10 = g^2 |alpha'|^2,
  /// p01 = reference-arm mean, p00 = 1 - p10 - p01, |d| = V sqrt(p10 p01)
  /// at the measured visibility.
  double c_out_first_order;

  static constexpr double kMeasuredVisibility = 0.936;
  static constexpr double kTargetInput = 0.08;
  static constexpr double kTargetOutput = 0.118;
  static constexpr double kTargetOutputError = 0.006;
};

/// Input concurrence is taken after the source split (p11 = 0), output
/// concurrence on the D2-heralded arms with the accidental p11 injected.
ConcurrenceReport concurrence_report(const InterferometerConfig& config, double accidental_p11);

/// Quantum-limited phase-insensitive amplifier of intensity gain G on `mode`:
/// two-mode squeezing with a vacuum ancilla (cosh^2 r = G) that is then traced
/// out. The mode's cutoff grows until the discarded weight is below
/// `leakage_tolerance` for every retained input level.
DensityOperator linear_amplifier_channel(const DensityOperator& rho, int mode, double gain,
                                         double leakage_tolerance = 1e-13);

struct LinearAmpCandidate {
  std::string model;
  double visibility;
};

/// Interferometer visibilities with the stage replaced by
/// linear_amplifier_channel at `gain`, one entry per readout model.
std::vector<LinearAmpCandidate> linear_amp_visibility_reference(const InterferometerConfig& config, double gain);

/// mu_out / mu_in.
double gain_from_counts(double mu_in, double mu_out);
/// True when scaling both rates by a detector efficiency leaves the gain
/// unchanged to `tolerance` (relative).
bool detector_efficiency_invariance(double mu_in, double mu_out, double detector_efficiency,
                                    double tolerance = 1e-12);

enum class EprMode {
  /// Large-N weights: |n> -> eta^{N/2} g^n |n>.
  kAnalytic,
  kCircuit,
};

struct EprResult {
  DensityOperator state;
  double probability;
  /// sqrt(P(n+1, n+1) / P(n, n)) for every populated consecutive pair.
  std::vector<double> ratios;
  /// Geometric mean of `ratios` (0 if there are none).
  double chi_prime;
  double entropy_in;
  double entropy_out;
};

/// Amplifies the second arm of epr_state(chi) at config.cutoff. A zero
/// cutoff selects 1 per arm for the circuit and, for the analytic weights, the
/// smallest cutoff whose (max(chi, g chi))^{2(c+1)} tail is below 1e-16;
/// TruncationError if that exceeds kMaxAutoEprCutoff.
inline constexpr int kMaxAutoEprCutoff = 40;
EprResult epr_distill(double chi, const NlaConfig& config, EprMode mode);

}  // namespace nlasim

#endif  // NLASIM_ANALYSIS_HPP
