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

#ifndef NLASIM_OPTICS_HPP
#define NLASIM_OPTICS_HPP

#include <vector>

#include "nlasim/fock.hpp"

namespace nlasim {

/// Default bound on norm lost to truncation by a unitary element.
inline constexpr double kUnitaryLeakageTolerance = 1e-10;
/// Default bound for the (non number-conserving) two-mode squeezer.
inline constexpr double kSqueezeLeakageTolerance = 1e-6;

/// Tunable beam splitter. `reflectivity` is the intensity fraction exchanged
/// between the two modes; `phase` is applied to the second mode before mixing.
struct BeamSplitterSpec {
  double reflectivity = 0.5;
  double phase = 0.0;

  void validate() const;
};

/// Two-mode squeezing strength chi = tanh r.
struct SqueezeSpec {
  double chi = 0.0;

  static SqueezeSpec from_gain(double gain);
  double squeeze_parameter() const;
  /// Amplifier gain cosh^2 r = 1 / (1 - chi^2).
  double gain() const { return 1.0 / (1.0 - chi * chi); }
  void validate() const;
};

/// Real symmetric beam splitter acting on creation operators as
///   a+ -> sqrt(1-R) a+ + sqrt(R) b+,   b+ -> sqrt(R) a+ - sqrt(1-R) b+
/// for modes a = mode_i, b = mode_j. The map is an involution.
/// Throws TruncationError if more than `leakage_tolerance` of the norm falls
/// outside the basis.
FockState beam_splitter(const FockState& psi, int mode_i, int mode_j, const BeamSplitterSpec& spec,
                        double leakage_tolerance = kUnitaryLeakageTolerance);
DensityOperator beam_splitter(const DensityOperator& rho, int mode_i, int mode_j,
                              const BeamSplitterSpec& spec,
                              double leakage_tolerance = kUnitaryLeakageTolerance);

/// Matrix element <m1, m2 | U | n1, n2> of the beam splitter above (untruncated).
double beam_splitter_amplitude(int n1, int n2, int m1, int m2, double reflectivity);

FockState phase_shift(const FockState& psi, int mode, double phi);
DensityOperator phase_shift(const DensityOperator& rho, int mode, double phi);

/// K sum_n chi^n |n, n>, truncated at `cutoff` and normalized.
FockState epr_state(const SqueezeSpec& spec, int cutoff);

/// exp(r (a+ b+ - a b)) with tanh r = spec.chi.
FockState two_mode_squeeze(const FockState& psi, int mode_i, int mode_j, const SqueezeSpec& spec,
                           double leakage_tolerance = kSqueezeLeakageTolerance);

/// Pure loss: mix with vacuum at reflectivity 1 - transmissivity and discard
/// the ancilla. Applied in its Kraus form.
DensityOperator loss_channel(const DensityOperator& rho, int mode, double transmissivity);

/// Symmetric 2N-port splitter built as a chain of beam splitters with
/// reflectivities 1/N, 1/(N-1), ..., 1/2 from `mode` into N-1 vacuum modes
/// appended after the existing ones (same cutoff as `mode`).
FockState multiport_split(const FockState& psi, int mode, int n_ports);
DensityOperator multiport_split(const DensityOperator& rho, int mode, int n_ports);

/// Inverse of multiport_split: the chain run in reverse over `modes`
/// (modes[0] is the designated output). The appended modes are kept.
FockState multiport_recombine(const FockState& psi, const std::vector<int>& modes);
DensityOperator multiport_recombine(const DensityOperator& rho, const std::vector<int>& modes);

/// Photon-number distribution at output port `mode_i` after mixing modes i and
/// j with `spec`, all other modes traced out. The output port is not
/// truncated: the result has cutoff(i) + cutoff(j) + 1 entries.
std::vector<double> output_port_distribution(const DensityOperator& rho, int mode_i, int mode_j,
                                             const BeamSplitterSpec& spec);

}  // namespace nlasim

#endif  // NLASIM_OPTICS_HPP
