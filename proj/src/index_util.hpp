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

#ifndef NLASIM_SRC_INDEX_UTIL_HPP
#define NLASIM_SRC_INDEX_UTIL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nlasim/basis.hpp"

namespace nlasim::detail {

/// Flat-index offsets of every basis vector of the sub-basis spanned by
/// `modes` (in increasing mode order), expressed as strides of `full`.
inline std::vector<std::size_t> subsystem_offsets(const Basis& full, std::vector<int> modes) {
  std::sort(modes.begin(), modes.end());
  std::vector<std::size_t> offsets{0};
  for (int m : modes) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(full.levels(m)));
    for (std::size_t base : offsets)
      for (int n = 0; n < full.levels(m); ++n) next.push_back(base + static_cast<std::size_t>(n) * full.stride(m));
    offsets = std::move(next);
  }
  return offsets;
}

inline std::vector<int> complement(int num_modes, const std::vector<int>& modes) {
  std::vector<int> rest;
  for (int m = 0; m < num_modes; ++m)
    if (std::find(modes.begin(), modes.end(), m) == modes.end()) rest.push_back(m);
  return rest;
}

/// Offsets of all basis vectors with `mode` set to zero, in sub-basis order.
inline std::vector<std::size_t> offsets_excluding(const Basis& full, int mode) {
  return subsystem_offsets(full, complement(full.num_modes(), {mode}));
}

}  // namespace nlasim::detail

#endif  // NLASIM_SRC_INDEX_UTIL_HPP
