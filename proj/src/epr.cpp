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
#include <stdexcept>
#include <string>

#include "nlasim/analysis.hpp"
#include "nlasim/errors.hpp"
#include "nlasim/optics.hpp"

namespace nlasim {
namespace {

constexpr double kPopulatedThreshold = 1e-24;

int analytic_cutoff(double x) {
  if (x == 0.0) return 1;
  int c = 1;
  while (std::pow(x, 2.0 * (c + 1)) > 1e-16) {
    if (++c > kMaxAutoEprCutoff)
      throw TruncationError("EPR tail at chi = " + std::to_string(x) + " needs a cutoff above " +
                                std::to_string(kMaxAutoEprCutoff) + "; set cutoff explicitly",
                            std::pow(x, 2.0 * (kMaxAutoEprCutoff + 1)));
  }
  return c;
}

std::vector<double> pair_ratios(const DensityOperator& rho) {
  const int c = std::min(rho.basis().cutoff(0), rho.basis().cutoff(1));
  std::vector<double> diag;
  for (int n = 0; n <= c; ++n) diag.push_back(rho.element({n, n}, {n, n}).real());
  const double scale = diag[0];
  std::vector<double> ratios;
  for (int n = 0; n + 1 <= c; ++n) {
    if (diag[n] <= kPopulatedThreshold * scale || diag[n + 1] <= kPopulatedThreshold * scale) break;
    ratios.push_back(std::sqrt(diag[n + 1] / diag[n]));
  }
  return ratios;
}

double reduced_entropy(const DensityOperator& rho) { return von_neumann_entropy(partial_trace(rho, {1})); }

}  // namespace

EprResult epr_distill(double chi, const NlaConfig& config, EprMode mode) {
  config.validate();
  if (!(chi >= 0.0 && chi < 1.0)) throw std::invalid_argument("chi must lie in [0,1)");
  const double g = std::sqrt(config.gain());
  if (mode == EprMode::kAnalytic && g * chi >= 1.0)
    throw std::domain_error("g * chi >= 1: amplified EPR state is not normalizable");

  int cutoff = config.cutoff;
  if (cutoff == 0) cutoff = mode == EprMode::kAnalytic ? analytic_cutoff(std::max(chi, g * chi)) : config.n_stages;
  const FockState input = epr_state(SqueezeSpec{chi}, cutoff);

  DensityOperator state = to_density(input);
  double probability = 0.0;
  if (mode == EprMode::kAnalytic) {
    Eigen::VectorXcd amps = input.amplitudes();
    const double weight = std::pow(config.eta, config.n_stages / 2.0);
    for (int n = 0; n <= cutoff; ++n) {
      const int occ[] = {n, n};
      amps(static_cast<Eigen::Index>(input.basis().index(occ))) *= weight * std::pow(g, n);
    }
    const FockState out(input.basis(), std::move(amps));
    probability = out.squared_norm();
    state = to_density(out.normalized());
  } else {
    NlaResult r = nla_full(input, 1, config);
    probability = r.probability;
    state = std::move(r.state);
  }
  std::vector<double> ratios = pair_ratios(state);
  double chi_prime = 0.0;
  if (!ratios.empty()) {
    double log_sum = 0.0;
    for (double r : ratios) log_sum += std::log(r);
    chi_prime = std::exp(log_sum / static_cast<double>(ratios.size()));
  }
  const double entropy_in = reduced_entropy(to_density(input));
  const double entropy_out = reduced_entropy(state);
  return {std::move(state), probability, std::move(ratios), chi_prime, entropy_in, entropy_out};
}

}  // namespace nlasim
