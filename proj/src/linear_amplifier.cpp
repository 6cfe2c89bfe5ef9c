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

#include "nlasim/analysis.hpp"
#include "nlasim/errors.hpp"
#include "operators.hpp"

namespace nlasim {
namespace {

constexpr int kMaxAmplifiedCutoff = 4000;

// Output distribution of input |n> is negative binomial:
// P(k) = G^{-(n+1)} Gamma^{2k} C(n+k, k) with Gamma^2 = 1 - 1/G.
int extra_levels(int n, double gain, double tolerance) {
  const double g2 = 1.0 - 1.0 / gain;
  double p = std::pow(gain, -(n + 1));
  double cumulative = p;
  int k = 0;
  while (1.0 - cumulative > tolerance) {
    ++k;
    p *= g2 * static_cast<double>(n + k) / k;
    cumulative += p;
    if (n + k > kMaxAmplifiedCutoff)
      throw TruncationError("linear amplifier output exceeds the maximum cutoff", 1.0 - cumulative);
  }
  return k;
}

}  // namespace

DensityOperator linear_amplifier_channel(const DensityOperator& rho, int mode, double gain, double leakage_tolerance) {
  rho.basis().check_mode(mode);
  if (!(gain >= 1.0)) throw std::invalid_argument("linear amplifier gain must be >= 1");
  if (!(leakage_tolerance > 0.0)) throw std::invalid_argument("leakage tolerance must be positive");
  if (gain == 1.0) return rho;
  const int cin = rho.basis().cutoff(mode);
  const int cout = cin + extra_levels(cin, gain, leakage_tolerance);
  const Basis out_basis = rho.basis().with_cutoff(mode, cout);
  const double gamma = std::sqrt(1.0 - 1.0 / gain);
  const double sech = 1.0 / std::sqrt(gain);
  const auto d = static_cast<Eigen::Index>(out_basis.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k <= cout; ++k) {
    Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(cout + 1, cin + 1);
    for (int n = 0; n <= cin && n + k <= cout; ++n) {
      const double binom = std::exp(std::lgamma(n + k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k + 1.0));
      local(n + k, n) = std::pow(sech, n + 1) * std::pow(gamma, k) * std::sqrt(binom);
    }
    out += detail::conjugate(detail::single_mode_operator(rho.basis(), out_basis, mode, local), rho.matrix());
  }
  return {out_basis, std::move(out)};
}

}  // namespace nlasim
