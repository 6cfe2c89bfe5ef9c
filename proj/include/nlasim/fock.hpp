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

#ifndef NLASIM_FOCK_HPP
#define NLASIM_FOCK_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "nlasim/basis.hpp"

namespace nlasim {

using Complex = std::complex<double>;

/// Pure multimode state: amplitude vector over a truncated Fock basis.
///
/// States are values. Nothing here normalizes implicitly, so conditional
/// (post-selected) states can carry their success probability in the norm.
class FockState {
 public:
  FockState(Basis basis, Eigen::VectorXcd amplitudes);

  static FockState vacuum(Basis basis);
  static FockState basis_state(Basis basis, std::span<const int> occupations);

  const Basis& basis() const { return basis_; }
  int num_modes() const { return basis_.num_modes(); }
  std::size_t dim() const { return basis_.dim(); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

  Complex amplitude(std::initializer_list<int> occupations) const;
  Complex amplitude(std::span<const int> occupations) const;

  double squared_norm() const { return amplitudes_.squaredNorm(); }
  /// Throws std::domain_error for a zero state.
  FockState normalized() const;
  FockState scaled(Complex factor) const;

  /// Re-express in another basis over the same modes. Components that do not
  /// fit the new cutoffs are dropped.
  FockState reshaped(const Basis& target) const;

 private:
  Basis basis_;
  Eigen::VectorXcd amplitudes_;
};

/// Mixed multimode state: dense matrix over a truncated Fock basis.
class DensityOperator {
 public:
  DensityOperator(Basis basis, Eigen::MatrixXcd matrix);

  const Basis& basis() const { return basis_; }
  int num_modes() const { return basis_.num_modes(); }
  std::size_t dim() const { return basis_.dim(); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  Complex element(std::initializer_list<int> row, std::initializer_list<int> col) const;

  double trace() const { return matrix_.trace().real(); }
  /// Throws std::domain_error for a zero-trace operator.
  DensityOperator normalized() const;
  DensityOperator scaled(double factor) const;
  DensityOperator reshaped(const Basis& target) const;

  /// Largest |rho - rho^dagger| entry.
  double hermiticity_error() const;
  double min_eigenvalue() const;
  double purity() const;

 private:
  Basis basis_;
  Eigen::MatrixXcd matrix_;
};

enum class Normalization { kNormalized, kExact };

/// Coherent state |alpha> truncated at `cutoff`. kExact keeps the exact
/// amplitudes e^{-|a|^2/2} a^n / sqrt(n!) (norm slightly below one);
/// kNormalized rescales the truncated vector to unit norm.
FockState coherent_state(Complex alpha, int cutoff,
                         Normalization normalization = Normalization::kNormalized);

/// Poisson weight lost by truncating |alpha> at `cutoff`.
double coherent_tail_weight(double magnitude, int cutoff);

FockState number_state(int n, int cutoff);

/// Uniform phase mixture of |alpha> with |alpha| = magnitude: diagonal Poisson
/// weights, renormalized over the cutoff.
DensityOperator phase_averaged_coherent(double magnitude, int cutoff);

/// (1-k)|0><0| + k|1><1|.
DensityOperator vacuum_mixture(double k, int cutoff = 1);

FockState tensor(const FockState& a, const FockState& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

DensityOperator to_density(const FockState& psi);

/// Trace out `traced_modes`; the remaining modes keep their relative order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& traced_modes);

Complex inner_product(const FockState& a, const FockState& b);

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2. Arguments are used
/// as given (no renormalization).
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);
double fidelity(const FockState& psi, const FockState& phi);
double fidelity(const FockState& psi, const DensityOperator& rho);

double mean_photon(const FockState& psi, int mode);
double mean_photon(const DensityOperator& rho, int mode);

/// Marginal photon-number distribution of one mode (length cutoff+1).
std::vector<double> photon_distribution(const DensityOperator& rho, int mode);
std::vector<double> photon_distribution(const FockState& psi, int mode);

/// Reorder modes: mode k of the result is mode order[k] of the input.
FockState permute_modes(const FockState& psi, const std::vector<int>& order);
DensityOperator permute_modes(const DensityOperator& rho, const std::vector<int>& order);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityOperator& rho);

}  // namespace nlasim

#endif  // NLASIM_FOCK_HPP
