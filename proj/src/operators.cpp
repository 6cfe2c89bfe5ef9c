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

#include "operators.hpp"

#include <stdexcept>

namespace nlasim::detail {

SparseOp two_mode_operator(const Basis& basis, int mode_i, int mode_j, const TwoModeAction& action) {
  basis.check_mode(mode_i);
  basis.check_mode(mode_j);
  if (mode_i == mode_j) throw std::invalid_argument("two-mode element needs distinct modes");
  const int ci = basis.cutoff(mode_i);
  const int cj = basis.cutoff(mode_j);
  const auto si = static_cast<std::ptrdiff_t>(basis.stride(mode_i));
  const auto sj = static_cast<std::ptrdiff_t>(basis.stride(mode_j));

  std::vector<std::vector<TwoModeTerm>> table(static_cast<std::size_t>((ci + 1) * (cj + 1)));
  for (int n1 = 0; n1 <= ci; ++n1)
    for (int n2 = 0; n2 <= cj; ++n2) {
      auto& terms = table[static_cast<std::size_t>(n1 * (cj + 1) + n2)];
      for (const auto& t : action(n1, n2))
        if (t.m1 <= ci && t.m2 <= cj && t.coefficient != 0.0) terms.push_back(t);
    }

  std::vector<Eigen::Triplet<Complex, std::ptrdiff_t>> triplets;
  triplets.reserve(basis.dim() * 2);
  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const int n1 = basis.occupation(idx, mode_i);
    const int n2 = basis.occupation(idx, mode_j);
    const auto base = static_cast<std::ptrdiff_t>(idx) - n1 * si - n2 * sj;
    for (const auto& t : table[static_cast<std::size_t>(n1 * (cj + 1) + n2)])
      triplets.emplace_back(base + t.m1 * si + t.m2 * sj, static_cast<std::ptrdiff_t>(idx), t.coefficient);
  }
  const auto d = static_cast<std::ptrdiff_t>(basis.dim());
  SparseOp op(d, d);
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

SparseOp single_mode_operator(const Basis& in, const Basis& out, int mode, const Eigen::MatrixXcd& local) {
  in.check_mode(mode);
  if (in.num_modes() != out.num_modes()) throw std::invalid_argument("mode count mismatch");
  for (int m = 0; m < in.num_modes(); ++m)
    if (m != mode && in.cutoff(m) != out.cutoff(m))
      throw std::invalid_argument("bases may differ only in the acted-on mode");
  if (local.rows() != out.levels(mode) || local.cols() != in.levels(mode))
    throw std::invalid_argument("local operator shape does not match cutoffs");

  std::vector<Eigen::Triplet<Complex, std::ptrdiff_t>> triplets;

  for (std::size_t idx = 0; idx < in.dim(); ++idx) {
    const int n = in.occupation(idx, mode);
    // Index of the same occupation tuple with `mode` zeroed, in `out`.
    std::ptrdiff_t base = 0;
    for (int m = 0; m < in.num_modes(); ++m)
      if (m != mode) base += static_cast<std::ptrdiff_t>(in.occupation(idx, m) * out.stride(m));
    for (Eigen::Index k = 0; k < local.rows(); ++k) {
      const Complex c = local(k, n);
      if (c != 0.0)
        triplets.emplace_back(base + static_cast<std::ptrdiff_t>(k * static_cast<Eigen::Index>(out.stride(mode))),
                              static_cast<std::ptrdiff_t>(idx), c);
    }
  }

  SparseOp op(static_cast<std::ptrdiff_t>(out.dim()), static_cast<std::ptrdiff_t>(in.dim()));
  op.setFromTriplets(triplets.begin(), triplets.end());
  return op;
}

}  // namespace nlasim::detail
