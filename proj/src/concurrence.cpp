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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlasim/analysis.hpp"

namespace nlasim {

const char* to_string(ConcurrenceNormalization mode) {
  return mode == ConcurrenceNormalization::kAbsolute ? "absolute" : "photon_subspace";
}

void ConcurrenceInputs::validate() const {
  for (double p : {p00, p10, p01, p11})
    if (!(p >= 0.0 && p <= 1.0 + 1e-12)) throw std::invalid_argument("concurrence probabilities must lie in [0,1]");
  if (!(d_mag >= 0.0)) throw std::invalid_argument("|d| must be non-negative");
  if (d_mag > std::sqrt(p10 * p01) + 1e-12) throw std::invalid_argument("|d| exceeds sqrt(p10 p01)");
  if (normalization == ConcurrenceNormalization::kAbsolute) {
    if (p00 + p10 + p01 > 1.0 + 1e-9) throw std::invalid_argument("absolute probabilities sum above one");
  } else if (std::abs(p00 + p10 + p01 + p11 - 1.0) > 1e-9) {
    throw std::invalid_argument("subspace probabilities must sum to one");
  }
}

double concurrence(const ConcurrenceInputs& inputs) {
  inputs.validate();
  return 2.0 * std::max(inputs.d_mag - std::sqrt(inputs.p00 * inputs.p11), 0.0);
}

ConcurrenceInputs concurrence_inputs(const DensityOperator& two_arm, double accidental_p11,
                                     ConcurrenceNormalization normalization) {
  if (two_arm.num_modes() != 2) throw std::invalid_argument("concurrence needs a two-mode state");
  if (two_arm.basis().cutoff(0) < 1 || two_arm.basis().cutoff(1) < 1)
    throw std::invalid_argument("concurrence needs cutoff >= 1 on both arms");
  if (!(accidental_p11 >= 0.0 && accidental_p11 <= 1.0)) throw std::invalid_argument("p11 must lie in [0,1]");
  ConcurrenceInputs in;
  in.p00 = two_arm.element({0, 0}, {0, 0}).real();
  in.p10 = two_arm.element({1, 0}, {1, 0}).real();
  in.p01 = two_arm.element({0, 1}, {0, 1}).real();
  in.p11 = accidental_p11;
  in.d_mag = std::abs(two_arm.element({1, 0}, {0, 1}));
  in.normalization = normalization;
  if (normalization == ConcurrenceNormalization::kPhotonSubspace) {
    const double total = in.p00 + in.p10 + in.p01 + in.p11;
    if (total <= 0.0) throw std::domain_error("state has no weight in the photon subspace");
    in.p00 /= total;
    in.p10 /= total;
    in.p01 /= total;
    in.p11 /= total;
    in.d_mag /= total;
  }
  return in;
}

ConcurrenceReport concurrence_report(const InterferometerConfig& config, double accidental_p11) {
  const DensityOperator before = interferometer_input_arms(config);
  const DensityOperator after = interferometer_arms(config, FringeBranch::kD2);
  ConcurrenceReport r{};
  r.input_absolute = concurrence_inputs(before, 0.0, ConcurrenceNormalization::kAbsolute);
  r.output_absolute = concurrence_inputs(after, accidental_p11, ConcurrenceNormalization::kAbsolute);
  r.input_subspace = concurrence_inputs(before, 0.0, ConcurrenceNormalization::kPhotonSubspace);
  r.output_subspace = concurrence_inputs(after, accidental_p11, ConcurrenceNormalization::kPhotonSubspace);
  r.c_in_absolute = concurrence(r.input_absolute);
  r.c_out_absolute = concurrence(r.output_absolute);
  r.c_in_subspace = concurrence(r.input_subspace);
  r.c_out_subspace = concurrence(r.output_subspace);
  ConcurrenceInputs first_order;
  first_order.p10 = config.stage().gain() * config.input_mean_photon;
  first_order.p01 = config.sigma * config.source_mean_photon();
  first_order.p00 = std::max(0.0, 1.0 - first_order.p10 - first_order.p01);
  first_order.p11 = accidental_p11;
  first_order.d_mag = ConcurrenceReport::kMeasuredVisibility * std::sqrt(first_order.p10 * first_order.p01);
  r.c_out_first_order = concurrence(first_order);
  return r;
}

double gain_from_counts(double mu_in, double mu_out) {
  if (!(mu_in > 0.0)) throw std::invalid_argument("mu_in must be positive");
  if (!(mu_out >= 0.0)) throw std::invalid_argument("mu_out must be non-negative");
  return mu_out / mu_in;
}

bool detector_efficiency_invariance(double mu_in, double mu_out, double detector_efficiency, double tolerance) {
  if (!(detector_efficiency > 0.0 && detector_efficiency <= 1.0))
    throw std::invalid_argument("detector efficiency must lie in (0,1]");
  const double g = gain_from_counts(mu_in, mu_out);
  const double scaled = gain_from_counts(mu_in * detector_efficiency, mu_out * detector_efficiency);
  return std::abs(scaled - g) <= tolerance * std::max(1.0, std::abs(g));
}

}  // namespace nlasim
