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

#include "nlasim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "index_util.hpp"

namespace nlasim {
namespace {

std::vector<int> to_vector(std::initializer_list<int> occ) { return {occ.begin(), occ.end()}; }

// Map every index of `from` to its index in `to`, or -1 if it does not fit.
std::vector<std::ptrdiff_t> reindex(const Basis& from, const Basis& to) {
  if (from.num_modes() != to.num_modes())
    throw std::invalid_argument("reshape requires the same number of modes");
  std::vector<std::ptrdiff_t> map(from.dim(), -1);
  for (std::size_t i = 0; i < from.dim(); ++i) {
    std::size_t j = 0;
    bool fits = true;
    for (int m = 0; m < from.num_modes(); ++m) {
      const int n = from.occupation(i, m);
      if (n > to.cutoff(m)) {
        fits = false;
        break;
      }
      j += static_cast<std::size_t>(n) * to.stride(m);
    }
    if (fits) map[i] = static_cast<std::ptrdiff_t>(j);
  }
  return map;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

void require_same_basis(const Basis& a, const Basis& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": basis mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------
// FockState

FockState::FockState(Basis basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.dim())
    throw std::invalid_argument("amplitude vector length does not match basis dimension");
}

FockState FockState::vacuum(Basis basis) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  v(0) = 1.0;
  return FockState(std::move(basis), std::move(v));
}

FockState FockState::basis_state(Basis basis, std::span<const int> occupations) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  v(static_cast<Eigen::Index>(basis.index(occupations))) = 1.0;
  return FockState(std::move(basis), std::move(v));
}

Complex FockState::amplitude(std::initializer_list<int> occupations) const {
  const auto occ = to_vector(occupations);
  return amplitude(std::span<const int>(occ));
}

Complex FockState::amplitude(std::span<const int> occupations) const {
  return amplitudes_(static_cast<Eigen::Index>(basis_.index(occupations)));
}

FockState FockState::normalized() const {
  const double n = amplitudes_.norm();
  if (n == 0.0) throw std::domain_error("cannot normalize a zero state");
  return FockState(basis_, amplitudes_ / n);
}

FockState FockState::scaled(Complex factor) const { return FockState(basis_, amplitudes_ * factor); }

FockState FockState::reshaped(const Basis& target) const {
  const auto map = reindex(basis_, target);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(target.dim()));
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] >= 0) v(map[i]) = amplitudes_(static_cast<Eigen::Index>(i));
  return FockState(target, std::move(v));
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(Basis basis, Eigen::MatrixXcd matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(basis_.dim());
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw std::invalid_argument("density matrix shape does not match basis dimension");
}

Complex DensityOperator::element(std::initializer_list<int> row, std::initializer_list<int> col) const {
  const auto r = to_vector(row);
  const auto c = to_vector(col);
  return matrix_(static_cast<Eigen::Index>(basis_.index(r)), static_cast<Eigen::Index>(basis_.index(c)));
}

DensityOperator DensityOperator::normalized() const {
  const double t = trace();
  if (t == 0.0) throw std::domain_error("cannot normalize a zero-trace operator");
  return DensityOperator(basis_, matrix_ / t);
}

DensityOperator DensityOperator::scaled(double factor) const {
  return DensityOperator(basis_, matrix_ * factor);
}

DensityOperator DensityOperator::reshaped(const Basis& target) const {
  const auto map = reindex(basis_, target);
  const auto d = static_cast<Eigen::Index>(target.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0) continue;
    for (std::size_t j = 0; j < map.size(); ++j)
      if (map[j] >= 0) m(map[i], map[j]) = matrix_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return DensityOperator(target, std::move(m));
}

double DensityOperator::hermiticity_error() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(matrix_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double DensityOperator::purity() const { return (matrix_ * matrix_).trace().real(); }

// ---------------------------------------------------------------------------
// Constructors

FockState coherent_state(Complex alpha, int cutoff, Normalization normalization) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
    throw std::invalid_argument("coherent amplitude must be finite");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  Eigen::VectorXcd v(cutoff + 1);
  v(0) = std::exp(-std::norm(alpha) / 2.0);
  for (int n = 1; n <= cutoff; ++n) v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  FockState psi(Basis::uniform(1, cutoff), std::move(v));
  return normalization == Normalization::kNormalized ? psi.normalized() : psi;
}

double coherent_tail_weight(double magnitude, int cutoff) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude))
    throw std::invalid_argument("magnitude must be finite and non-negative");
  const double mean = magnitude * magnitude;
  // Sum the tail directly; 1 - head cancels catastrophically for small tails.
  double term = std::exp(-mean);
  for (int n = 1; n <= cutoff + 1; ++n) term *= mean / n;
  double tail = 0.0;
  for (int n = cutoff + 1; term > 1e-300 && n < cutoff + 100000; ++n) {
    tail += term;
    term *= mean / (n + 1);
    if (term < tail * 1e-18) break;
  }
  return tail;
}

FockState number_state(int n, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  if (n < 0 || n > cutoff)
    throw std::out_of_range("photon number " + std::to_string(n) + " exceeds cutoff " + std::to_string(cutoff));
  const int occ[] = {n};
  return FockState::basis_state(Basis::uniform(1, cutoff), occ);
}

DensityOperator phase_averaged_coherent(double magnitude, int cutoff) {
  if (!(magnitude >= 0.0) || !std::isfinite(magnitude))
    throw std::invalid_argument("magnitude must be finite and non-negative");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const double mean = magnitude * magnitude;
  Eigen::VectorXd w(cutoff + 1);
  w(0) = std::exp(-mean);
  for (int n = 1; n <= cutoff; ++n) w(n) = w(n - 1) * mean / n;
  w /= w.sum();
  return DensityOperator(Basis::uniform(1, cutoff), w.cast<Complex>().asDiagonal());
}

DensityOperator vacuum_mixture(double k, int cutoff) {
  if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("vacuum_mixture weight must lie in [0,1]");
  if (cutoff < 1) throw std::invalid_argument("vacuum_mixture needs cutoff >= 1");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
  m(0, 0) = 1.0 - k;
  m(1, 1) = k;
  return DensityOperator(Basis::uniform(1, cutoff), std::move(m));
}

// ---------------------------------------------------------------------------
// Algebra

FockState tensor(const FockState& a, const FockState& b) {
  Basis basis = a.basis().appended(b.basis().cutoffs());
  const auto na = static_cast<Eigen::Index>(a.dim());
  const auto nb = static_cast<Eigen::Index>(b.dim());
  Eigen::VectorXcd v(na * nb);
  for (Eigen::Index i = 0; i < na; ++i) v.segment(i * nb, nb) = a.amplitudes()(i) * b.amplitudes();
  return FockState(std::move(basis), std::move(v));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  Basis basis = a.basis().appended(b.basis().cutoffs());
  const auto na = static_cast<Eigen::Index>(a.dim());
  const auto nb = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXcd m(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < na; ++j) m.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
  return DensityOperator(std::move(basis), std::move(m));
}

DensityOperator to_density(const FockState& psi) {
  return DensityOperator(psi.basis(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& traced_modes) {
  const Basis& full = rho.basis();
  for (int m : traced_modes) full.check_mode(m);
  Basis reduced = full.without(traced_modes);
  const auto kept = detail::subsystem_offsets(full, detail::complement(full.num_modes(), traced_modes));
  const auto traced = detail::subsystem_offsets(full, traced_modes);
  const auto d = static_cast<Eigen::Index>(reduced.dim());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  const auto& src = rho.matrix();
  for (std::size_t t : traced)
    for (Eigen::Index a = 0; a < d; ++a)
      for (Eigen::Index b = 0; b < d; ++b)
        m(a, b) += src(static_cast<Eigen::Index>(kept[static_cast<std::size_t>(a)] + t),
                       static_cast<Eigen::Index>(kept[static_cast<std::size_t>(b)] + t));
  return DensityOperator(std::move(reduced), std::move(m));
}

Complex inner_product(const FockState& a, const FockState& b) {
  require_same_basis(a.basis(), b.basis(), "inner_product");
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_basis(rho.basis(), sigma.basis(), "fidelity");
  const Eigen::MatrixXcd s = psd_sqrt(rho.matrix());
  const Eigen::MatrixXcd inner = s * sigma.matrix() * s;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
  const double root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double fidelity(const FockState& psi, const FockState& phi) {
  return std::clamp(std::norm(inner_product(psi, phi)), 0.0, 1.0);
}

double fidelity(const FockState& psi, const DensityOperator& rho) {
  require_same_basis(psi.basis(), rho.basis(), "fidelity");
  return std::clamp((psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0).real(), 0.0, 1.0);
}

std::vector<double> photon_distribution(const DensityOperator& rho, int mode) {
  rho.basis().check_mode(mode);
  std::vector<double> p(static_cast<std::size_t>(rho.basis().levels(mode)), 0.0);
  for (std::size_t i = 0; i < rho.dim(); ++i)
    p[static_cast<std::size_t>(rho.basis().occupation(i, mode))] +=
        rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  return p;
}

std::vector<double> photon_distribution(const FockState& psi, int mode) {
  psi.basis().check_mode(mode);
  std::vector<double> p(static_cast<std::size_t>(psi.basis().levels(mode)), 0.0);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    p[static_cast<std::size_t>(psi.basis().occupation(i, mode))] +=
        std::norm(psi.amplitudes()(static_cast<Eigen::Index>(i)));
  return p;
}

double mean_photon(const FockState& psi, int mode) {
  const auto p = photon_distribution(psi, mode);
  double mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
  return mean;
}

double mean_photon(const DensityOperator& rho, int mode) {
  const auto p = photon_distribution(rho, mode);
  double mean = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) mean += static_cast<double>(n) * p[n];
  return mean;
}

namespace {

// For each index of the permuted basis, the index in the original basis.
std::vector<Eigen::Index> permutation_map(const Basis& from, const std::vector<int>& order, Basis& to) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    if (sorted[static_cast<std::size_t>(k)] != k || static_cast<int>(order.size()) != from.num_modes())
      throw std::invalid_argument("mode order must be a permutation");
  std::vector<int> cut;
  for (int m : order) cut.push_back(from.cutoff(m));
  to = Basis(cut);
  std::vector<Eigen::Index> map(to.dim());
  for (std::size_t i = 0; i < to.dim(); ++i) {
    std::size_t j = 0;
    for (int k = 0; k < to.num_modes(); ++k)
      j += static_cast<std::size_t>(to.occupation(i, k)) * from.stride(order[static_cast<std::size_t>(k)]);
    map[i] = static_cast<Eigen::Index>(j);
  }
  return map;
}

}  // namespace

FockState permute_modes(const FockState& psi, const std::vector<int>& order) {
  Basis to;
  const auto map = permutation_map(psi.basis(), order, to);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(to.dim()));
  for (std::size_t i = 0; i < map.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi.amplitudes()(map[i]);
  return FockState(std::move(to), std::move(v));
}

DensityOperator permute_modes(const DensityOperator& rho, const std::vector<int>& order) {
  Basis to;
  const auto map = permutation_map(rho.basis(), order, to);
  const auto d = static_cast<Eigen::Index>(to.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rho.matrix()(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)]);
  return DensityOperator(std::move(to), std::move(m));
}

double von_neumann_entropy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double l : es.eigenvalues())
    if (l > 1e-15) s -= l * std::log2(l);
  return s;
}

}  // namespace nlasim
