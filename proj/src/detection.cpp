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

#include "nlasim/detection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "index_util.hpp"
#include "nlasim/optics.hpp"

namespace nlasim {
namespace {

// Sort conditions by decreasing mode so removing one leaves the indices of
// the remaining ones valid.
std::vector<HeraldCondition> removal_order(const HeraldPattern& pattern) {
  auto c = pattern.conditions;
  std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.mode > y.mode; });
  return c;
}

}  // namespace

bool HeraldPattern::ideal() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const auto& c) { return c.efficiency == 1.0; });
}

void HeraldPattern::validate(const Basis& basis) const {
  std::vector<int> modes;
  for (const auto& c : conditions) {
    basis.check_mode(c.mode);
    if (c.count < 0 || c.count > basis.cutoff(c.mode))
      throw std::out_of_range("herald count " + std::to_string(c.count) + " outside cutoff of mode " +
                              std::to_string(c.mode));
    if (!(c.efficiency > 0.0 && c.efficiency <= 1.0))
      throw std::invalid_argument("detector efficiency must lie in (0,1]");
    modes.push_back(c.mode);
  }
  std::sort(modes.begin(), modes.end());
  if (std::adjacent_find(modes.begin(), modes.end()) != modes.end())
    throw std::invalid_argument("herald pattern lists a mode twice");
  if (static_cast<int>(modes.size()) >= basis.num_modes() && !modes.empty())
    throw std::invalid_argument("herald pattern must leave at least one mode unmeasured");
}

Projection<FockState> project_count(const FockState& psi, int mode, int n) {
  const Basis& basis = psi.basis();
  basis.check_mode(mode);
  if (n < 0 || n > basis.cutoff(mode)) throw std::out_of_range("projection count outside cutoff");
  if (basis.num_modes() == 1) throw std::invalid_argument("cannot project out the only mode");
  const auto rest = detail::offsets_excluding(basis, mode);
  const std::size_t shift = static_cast<std::size_t>(n) * basis.stride(mode);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(rest.size()));
  for (std::size_t k = 0; k < rest.size(); ++k) v(static_cast<Eigen::Index>(k)) = psi.amplitudes()(static_cast<Eigen::Index>(rest[k] + shift));
  const double p = v.squaredNorm();
  return {FockState(basis.without(mode), std::move(v)), p};
}

Projection<DensityOperator> project_count(const DensityOperator& rho, int mode, int n) {
  const Basis& basis = rho.basis();
  basis.check_mode(mode);
  if (n < 0 || n > basis.cutoff(mode)) throw std::out_of_range("projection count outside cutoff");
  if (basis.num_modes() == 1) throw std::invalid_argument("cannot project out the only mode");
  const auto rest = detail::offsets_excluding(basis, mode);
  const std::size_t shift = static_cast<std::size_t>(n) * basis.stride(mode);
  const auto d = static_cast<Eigen::Index>(rest.size());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b)
      m(a, b) = rho.matrix()(static_cast<Eigen::Index>(rest[static_cast<std::size_t>(a)] + shift),
                             static_cast<Eigen::Index>(rest[static_cast<std::size_t>(b)] + shift));
  const double p = m.trace().real();
  return {DensityOperator(basis.without(mode), std::move(m)), p};
}

FockState herald_unnormalized(const FockState& psi, const HeraldPattern& pattern) {
  pattern.validate(psi.basis());
  if (!pattern.ideal())
    throw std::invalid_argument("finite detector efficiency mixes the state; herald a DensityOperator");
  FockState s = psi;
  for (const auto& c : removal_order(pattern)) s = project_count(s, c.mode, c.count).state;
  return s;
}

DensityOperator herald_unnormalized(const DensityOperator& rho, const HeraldPattern& pattern) {
  pattern.validate(rho.basis());
  DensityOperator s = rho;
  for (const auto& c : removal_order(pattern)) {
    if (c.efficiency < 1.0) s = loss_channel(s, c.mode, c.efficiency);
    s = project_count(s, c.mode, c.count).state;
  }
  return s;
}

HeraldOutcome<FockState> herald(const FockState& psi, const HeraldPattern& pattern) {
  FockState s = herald_unnormalized(psi, pattern);
  const double p = s.squared_norm();
  if (p <= 0.0) return {std::move(s), 0.0, true};
  return {s.normalized(), p, false};
}

HeraldOutcome<DensityOperator> herald(const DensityOperator& rho, const HeraldPattern& pattern) {
  DensityOperator s = herald_unnormalized(rho, pattern);
  const double p = s.trace();
  if (p <= 0.0) return {DensityOperator(s.basis(), Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s.dim()), static_cast<Eigen::Index>(s.dim()))), 0.0, true};
  return {s.normalized(), p, false};
}

}  // namespace nlasim
