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

#ifndef NLASIM_SRC_OPERATORS_HPP
#define NLASIM_SRC_OPERATORS_HPP

#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "nlasim/basis.hpp"
#include "nlasim/fock.hpp"

namespace nlasim::detail {

using SparseOp = Eigen::SparseMatrix<Complex, Eigen::ColMajor, std::ptrdiff_t>;

struct TwoModeTerm {
  int m1;
  int m2;
  Complex coefficient;
};

/// Local two-mode action: input occupations (n1, n2) -> output terms.
using TwoModeAction = std::function<std::vector<TwoModeTerm>(int, int)>;

/// Lift a two-mode action to the full space of `basis`; output terms that do
/// not fit the cutoffs are dropped.
SparseOp two_mode_operator(const Basis& basis, int mode_i, int mode_j, const TwoModeAction& action);

/// Lift a single-mode matrix (out.levels(mode) x in.levels(mode)) to a map
/// from `in` to `out`, which may differ only in the cutoff of `mode`.
SparseOp single_mode_operator(const Basis& in, const Basis& out, int mode, const Eigen::MatrixXcd& local);

inline Eigen::VectorXcd apply(const SparseOp& op, const Eigen::VectorXcd& v) { return op * v; }

inline Eigen::MatrixXcd conjugate(const SparseOp& op, const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd left = op * rho;
  Eigen::MatrixXcd tmp = op * left.adjoint();
  return tmp.adjoint();
}

}  // namespace nlasim::detail

#endif  // NLASIM_SRC_OPERATORS_HPP
