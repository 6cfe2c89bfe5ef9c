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

#ifndef NLASIM_DETECTION_HPP
#define NLASIM_DETECTION_HPP

#include <vector>

#include "nlasim/fock.hpp"

namespace nlasim {

/// Require `count` photons in `mode`, registered by a detector of the given
/// efficiency. Detectors are photon-number resolving; at the one-photon
/// heralds used here this is equivalent to a click detector.
struct HeraldCondition {
  int mode = 0;
  int count = 0;
  double efficiency = 1.0;
};

struct HeraldPattern {
  std::vector<HeraldCondition> conditions;

  bool ideal() const;
  void validate(const Basis& basis) const;
};

/// Conditional state after projecting `mode` onto `n` photons, with the mode
/// removed. `state` is unnormalized; its squared norm (trace) is `probability`.
template <typename State>
struct Projection {
  State state;
  double probability;
};

/// Post-selected state on the unmeasured modes. `state` is normalized when
/// `probability` > 0; for an impossible pattern it is the zero operator and
/// `empty` is set.
template <typename State>
struct HeraldOutcome {
  State state;
  double probability = 0.0;
  bool empty = false;
};

Projection<FockState> project_count(const FockState& psi, int mode, int n);
Projection<DensityOperator> project_count(const DensityOperator& rho, int mode, int n);

/// Pure-state heralding; every condition must have unit efficiency (finite
/// efficiency mixes the state, use the density-operator overload).
HeraldOutcome<FockState> herald(const FockState& psi, const HeraldPattern& pattern);
/// Each detected mode first passes through loss_channel(efficiency).
HeraldOutcome<DensityOperator> herald(const DensityOperator& rho, const HeraldPattern& pattern);

/// Unnormalized conditional operator (trace = probability), for callers that
/// sum over outcomes.
DensityOperator herald_unnormalized(const DensityOperator& rho, const HeraldPattern& pattern);
FockState herald_unnormalized(const FockState& psi, const HeraldPattern& pattern);

}  // namespace nlasim

#endif  // NLASIM_DETECTION_HPP
