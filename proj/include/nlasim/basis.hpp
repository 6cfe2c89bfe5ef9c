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

#ifndef NLASIM_BASIS_HPP
#define NLASIM_BASIS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace nlasim {

/// Truncated photon-number basis over an ordered set of modes.
///
/// Basis vectors are occupation tuples (n_0, ..., n_{m-1}) with n_i <= cutoff(i),
/// enumerated lexicographically with mode 0 varying slowest. The flat index of a
/// tuple is sum_i n_i * stride(i), where stride(m-1) = 1. This ordering is part
/// of the output format and must not change.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<int> cutoffs);

  static Basis uniform(int num_modes, int cutoff);

  int num_modes() const { return static_cast<int>(cutoffs_.size()); }
  int cutoff(int mode) const { return cutoffs_.at(static_cast<std::size_t>(mode)); }
  int levels(int mode) const { return cutoff(mode) + 1; }
  const std::vector<int>& cutoffs() const { return cutoffs_; }
  std::size_t dim() const { return dim_; }
  std::size_t stride(int mode) const { return strides_.at(static_cast<std::size_t>(mode)); }
  bool is_uniform() const;

  /// Photon number of `mode` in basis vector `index`.
  int occupation(std::size_t index, int mode) const {
    return static_cast<int>((index / stride(mode)) % static_cast<std::size_t>(levels(mode)));
  }
  std::vector<int> occupations(std::size_t index) const;
  std::size_t index(std::span<const int> occupations) const;
  int total_photons(std::size_t index) const;

  /// Basis with `mode` removed.
  Basis without(int mode) const;
  /// Basis with the listed modes removed (any order, no duplicates).
  Basis without(std::vector<int> modes) const;
  /// Basis with modes appended after the existing ones.
  Basis appended(std::span<const int> extra_cutoffs) const;
  /// Same modes with `mode` given a new cutoff.
  Basis with_cutoff(int mode, int cutoff) const;

  void check_mode(int mode) const;

  friend bool operator==(const Basis& a, const Basis& b) { return a.cutoffs_ == b.cutoffs_; }

 private:
  std::vector<int> cutoffs_;
  std::vector<std::size_t> strides_;
  std::size_t dim_ = 1;
};

}  // namespace nlasim

#endif  // NLASIM_BASIS_HPP
