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

#include "nlasim/basis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nlasim {

Basis::Basis(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) throw std::invalid_argument("basis needs at least one mode");
  strides_.assign(cutoffs_.size(), 1);
  dim_ = 1;
  for (std::size_t k = cutoffs_.size(); k-- > 0;) {
    if (cutoffs_[k] < 0) throw std::invalid_argument("cutoff must be non-negative");
    strides_[k] = dim_;
    dim_ *= static_cast<std::size_t>(cutoffs_[k] + 1);
  }
}

Basis Basis::uniform(int num_modes, int cutoff) {
  if (num_modes < 1) throw std::invalid_argument("num_modes must be positive");
  return Basis(std::vector<int>(static_cast<std::size_t>(num_modes), cutoff));
}

bool Basis::is_uniform() const {
  return std::all_of(cutoffs_.begin(), cutoffs_.end(),
                     [&](int c) { return c == cutoffs_.front(); });
}

std::vector<int> Basis::occupations(std::size_t index) const {
  std::vector<int> occ(cutoffs_.size());
  for (int m = 0; m < num_modes(); ++m) occ[static_cast<std::size_t>(m)] = occupation(index, m);
  return occ;
}

std::size_t Basis::index(std::span<const int> occupations) const {
  if (occupations.size() != cutoffs_.size())
    throw std::invalid_argument("occupation tuple has wrong number of modes");
  std::size_t idx = 0;
  for (std::size_t m = 0; m < cutoffs_.size(); ++m) {
    if (occupations[m] < 0 || occupations[m] > cutoffs_[m])
      throw std::out_of_range("occupation exceeds cutoff in mode " + std::to_string(m));
    idx += static_cast<std::size_t>(occupations[m]) * strides_[m];
  }
  return idx;
}

int Basis::total_photons(std::size_t index) const {
  int total = 0;
  for (int m = 0; m < num_modes(); ++m) total += occupation(index, m);
  return total;
}

void Basis::check_mode(int mode) const {
  if (mode < 0 || mode >= num_modes())
    throw std::out_of_range("mode " + std::to_string(mode) + " out of range for " +
                            std::to_string(num_modes()) + "-mode basis");
}

Basis Basis::without(int mode) const { return without(std::vector<int>{mode}); }

Basis Basis::without(std::vector<int> modes) const {
  std::sort(modes.begin(), modes.end());
  if (std::adjacent_find(modes.begin(), modes.end()) != modes.end())
    throw std::invalid_argument("duplicate mode in removal list");
  for (int m : modes) check_mode(m);
  std::vector<int> kept;
  for (int m = 0; m < num_modes(); ++m)
    if (!std::binary_search(modes.begin(), modes.end(), m)) kept.push_back(cutoff(m));
  if (kept.empty()) throw std::invalid_argument("cannot remove every mode");
  return Basis(std::move(kept));
}

Basis Basis::appended(std::span<const int> extra_cutoffs) const {
  std::vector<int> c = cutoffs_;
  c.insert(c.end(), extra_cutoffs.begin(), extra_cutoffs.end());
  return Basis(std::move(c));
}

Basis Basis::with_cutoff(int mode, int cutoff) const {
  check_mode(mode);
  std::vector<int> c = cutoffs_;
  c[static_cast<std::size_t>(mode)] = cutoff;
  return Basis(std::move(c));
}

}  // namespace nlasim
