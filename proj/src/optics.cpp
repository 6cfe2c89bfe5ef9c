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

#include "nlasim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "index_util.hpp"
#include "nlasim/errors.hpp"
#include "operators.hpp"

namespace nlasim {
namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double binomial(int n, int k) {
  return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

double ipow(double x, int k) { return k == 0 ? 1.0 : std::pow(x, k); }

detail::TwoModeAction beam_splitter_action(double reflectivity) {
  return [reflectivity](int n1, int n2) {
    std::vector<detail::TwoModeTerm> terms;
    const int total = n1 + n2;
    terms.reserve(static_cast<std::size_t>(total + 1));
    for (int m1 = 0; m1 <= total; ++m1)
      terms.push_back({m1, total - m1, beam_splitter_amplitude(n1, n2, m1, total - m1, reflectivity)});
    return terms;
  };
}

void check_leakage(double before, double after, double tolerance, const char* what) {
  const double leak = before - after;
  if (leak > tolerance)
    throw TruncationError(std::string(what) + ": truncation leakage " + std::to_string(leak) +
                              " exceeds tolerance; increase the cutoff",
                          leak);
}

FockState apply_two_mode(const FockState& psi, const detail::SparseOp& op, double tol, const char* what) {
  Eigen::VectorXcd v = op * psi.amplitudes();
  check_leakage(psi.squared_norm(), v.squaredNorm(), tol, what);
  return FockState(psi.basis(), std::move(v));
}

DensityOperator apply_two_mode(const DensityOperator& rho, const detail::SparseOp& op, double tol,
                               const char* what) {
  Eigen::MatrixXcd m = detail::conjugate(op, rho.matrix());
  check_leakage(rho.trace(), m.trace().real(), tol, what);
  return DensityOperator(rho.basis(), std::move(m));
}

template <typename State>
State split_impl(const State& in, int mode, int n_ports) {
  in.basis().check_mode(mode);
  if (n_ports < 1) throw std::invalid_argument("multiport splitter needs N >= 1");
  if (n_ports == 1) return in;
  const std::vector<int> extra(static_cast<std::size_t>(n_ports - 1), in.basis().cutoff(mode));
  const Basis anc(extra);
  State out = [&] {
    if constexpr (std::is_same_v<State, FockState>) {
      return tensor(in, FockState::vacuum(anc));
    } else {
      return tensor(in, to_density(FockState::vacuum(anc)));
    }
  }();
  const int first_new = in.num_modes();
  for (int k = 1; k < n_ports; ++k)
    out = beam_splitter(out, mode, first_new + k - 1, {1.0 / (n_ports - k + 1), 0.0});
  return out;
}

template <typename State>
State recombine_impl(const State& in, const std::vector<int>& modes) {
  const int n = static_cast<int>(modes.size());
  if (n < 1) throw std::invalid_argument("multiport recombiner needs N >= 1");
  State out = in;
  for (int k = n - 1; k >= 1; --k)
    out = beam_splitter(out, modes[0], modes[static_cast<std::size_t>(k)], {1.0 / (n - k + 1), 0.0});
  return out;
}

}  // namespace

void BeamSplitterSpec::validate() const {
  if (!(reflectivity >= 0.0 && reflectivity <= 1.0))
    throw std::invalid_argument("beam splitter reflectivity must lie in [0,1]");
  if (!std::isfinite(phase)) throw std::invalid_argument("beam splitter phase must be finite");
}

SqueezeSpec SqueezeSpec::from_gain(double gain) {
  if (!(gain >= 1.0) || !std::isfinite(gain)) throw std::invalid_argument("amplifier gain must be >= 1");
  return {std::sqrt(1.0 - 1.0 / gain)};
}

double SqueezeSpec::squeeze_parameter() const { return std::atanh(chi); }

void SqueezeSpec::validate() const {
  if (!(chi >= 0.0 && chi < 1.0)) throw std::invalid_argument("squeezing chi must lie in [0,1)");
}

double beam_splitter_amplitude(int n1, int n2, int m1, int m2, double reflectivity) {
  if (m1 + m2 != n1 + n2 || m1 < 0 || m2 < 0) return 0.0;
  const double t = std::sqrt(1.0 - reflectivity);
  const double r = std::sqrt(reflectivity);
  double sum = 0.0;
  for (int k = std::max(0, m1 - n2); k <= std::min(n1, m1); ++k) {
    const int l = m1 - k;
    const double sign = ((n2 - l) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(n1, k) * binomial(n2, l) * ipow(t, k + n2 - l) * ipow(r, n1 - k + l);
  }
  const double pre =
      std::exp(0.5 * (log_factorial(m1) + log_factorial(m2) - log_factorial(n1) - log_factorial(n2)));
  return pre * sum;
}

FockState beam_splitter(const FockState& psi, int mode_i, int mode_j, const BeamSplitterSpec& spec,
                        double leakage_tolerance) {
  spec.validate();
  const FockState in = spec.phase != 0.0 ? phase_shift(psi, mode_j, spec.phase) : psi;
  const auto op = detail::two_mode_operator(in.basis(), mode_i, mode_j, beam_splitter_action(spec.reflectivity));
  return apply_two_mode(in, op, leakage_tolerance, "beam_splitter");
}

DensityOperator beam_splitter(const DensityOperator& rho, int mode_i, int mode_j, const BeamSplitterSpec& spec,
                              double leakage_tolerance) {
  spec.validate();
  const DensityOperator in = spec.phase != 0.0 ? phase_shift(rho, mode_j, spec.phase) : rho;
  const auto op = detail::two_mode_operator(in.basis(), mode_i, mode_j, beam_splitter_action(spec.reflectivity));
  return apply_two_mode(in, op, leakage_tolerance, "beam_splitter");
}

FockState phase_shift(const FockState& psi, int mode, double phi) {
  psi.basis().check_mode(mode);
  Eigen::VectorXcd v = psi.amplitudes();
  for (std::size_t i = 0; i < psi.dim(); ++i)
    v(static_cast<Eigen::Index>(i)) *= std::polar(1.0, phi * psi.basis().occupation(i, mode));
  return FockState(psi.basis(), std::move(v));
}

DensityOperator phase_shift(const DensityOperator& rho, int mode, double phi) {
  rho.basis().check_mode(mode);
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Eigen::VectorXcd ph(d);
  for (Eigen::Index i = 0; i < d; ++i)
    ph(i) = std::polar(1.0, phi * rho.basis().occupation(static_cast<std::size_t>(i), mode));
  Eigen::MatrixXcd m = ph.asDiagonal() * rho.matrix() * ph.conjugate().asDiagonal();
  return DensityOperator(rho.basis(), std::move(m));
}

FockState epr_state(const SqueezeSpec& spec, int cutoff) {
  spec.validate();
  if (cutoff < 0) throw std::invalid_argument("cutoff must be non-negative");
  const Basis basis = Basis::uniform(2, cutoff);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.dim()));
  double amp = 1.0;
  for (int n = 0; n <= cutoff; ++n, amp *= spec.chi) {
    const int occ[] = {n, n};
    v(static_cast<Eigen::Index>(basis.index(occ))) = amp;
  }
  return FockState(basis, v).normalized();
}

FockState two_mode_squeeze(const FockState& psi, int mode_i, int mode_j, const SqueezeSpec& spec,
                           double leakage_tolerance) {
  spec.validate();
  const double gamma = spec.chi;
  const double sech = std::sqrt(1.0 - gamma * gamma);
  const int ci = psi.basis().cutoff(mode_i);
  const int cj = psi.basis().cutoff(mode_j);
  // Disentangled form exp(G a+b+) sech^(n_a + n_b + 1) exp(-G a b), G = tanh r.
  auto action = [=](int n1, int n2) {
    std::vector<detail::TwoModeTerm> terms;
    for (int j = 0; j <= std::min(n1, n2); ++j) {
      const int p = n1 - j;
      const int q = n2 - j;
      const double lower =
          0.5 * (log_factorial(n1) - log_factorial(p) + log_factorial(n2) - log_factorial(q)) - log_factorial(j);
      const double lower_coef = (j % 2 == 0 ? 1.0 : -1.0) * ipow(gamma, j) * std::exp(lower) * ipow(sech, p + q + 1);
      for (int k = 0; p + k <= ci && q + k <= cj; ++k) {
        const double raise = 0.5 * (log_factorial(p + k) - log_factorial(p) + log_factorial(q + k) - log_factorial(q)) -
                             log_factorial(k);
        terms.push_back({p + k, q + k, lower_coef * ipow(gamma, k) * std::exp(raise)});
      }
    }
    return terms;
  };
  const auto op = detail::two_mode_operator(psi.basis(), mode_i, mode_j, action);
  return apply_two_mode(psi, op, leakage_tolerance, "two_mode_squeeze");
}

DensityOperator loss_channel(const DensityOperator& rho, int mode, double transmissivity) {
  rho.basis().check_mode(mode);
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
    throw std::invalid_argument("transmissivity must lie in [0,1]");
  if (transmissivity == 1.0) return rho;
  const int levels = rho.basis().levels(mode);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rho.dim()),
                                                static_cast<Eigen::Index>(rho.dim()));
  for (int k = 0; k < levels; ++k) {
    // A_k |n> = sqrt(C(n,k) t^(n-k) (1-t)^k) |n-k>: k photons reflected into the ancilla.
    Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(levels, levels);
    for (int n = k; n < levels; ++n)
      local(n - k, n) = std::sqrt(binomial(n, k) * ipow(transmissivity, n - k) * ipow(1.0 - transmissivity, k));
    const auto op = detail::single_mode_operator(rho.basis(), rho.basis(), mode, local);
    out += detail::conjugate(op, rho.matrix());
  }
  return DensityOperator(rho.basis(), std::move(out));
}

FockState multiport_split(const FockState& psi, int mode, int n_ports) { return split_impl(psi, mode, n_ports); }
DensityOperator multiport_split(const DensityOperator& rho, int mode, int n_ports) {
  return split_impl(rho, mode, n_ports);
}
FockState multiport_recombine(const FockState& psi, const std::vector<int>& modes) {
  return recombine_impl(psi, modes);
}
DensityOperator multiport_recombine(const DensityOperator& rho, const std::vector<int>& modes) {
  return recombine_impl(rho, modes);
}

std::vector<double> output_port_distribution(const DensityOperator& rho, int mode_i, int mode_j,
                                             const BeamSplitterSpec& spec) {
  spec.validate();
  rho.basis().check_mode(mode_i);
  rho.basis().check_mode(mode_j);
  if (mode_i == mode_j) throw std::invalid_argument("output_port_distribution needs distinct modes");
  std::vector<int> others = detail::complement(rho.num_modes(), {mode_i, mode_j});
  DensityOperator two = others.empty() ? rho : partial_trace(rho, others);
  // partial_trace keeps relative order; put mode_i first.
  const int a = mode_i < mode_j ? 0 : 1;
  const int b = 1 - a;
  if (spec.phase != 0.0) two = phase_shift(two, b, spec.phase);
  const Basis& basis = two.basis();
  const int ca = basis.cutoff(a);
  const int cb = basis.cutoff(b);
  std::vector<double> dist(static_cast<std::size_t>(ca + cb + 1), 0.0);
  for (int total = 0; total <= ca + cb; ++total) {
    std::vector<Eigen::Index> idx;
    std::vector<int> na;
    for (int n1 = std::max(0, total - cb); n1 <= std::min(ca, total); ++n1) {
      int occ[2];
      occ[a] = n1;
      occ[b] = total - n1;
      idx.push_back(static_cast<Eigen::Index>(basis.index(occ)));
      na.push_back(n1);
    }
    const auto s = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXcd block(s, s);
    for (Eigen::Index x = 0; x < s; ++x)
      for (Eigen::Index y = 0; y < s; ++y) block(x, y) = two.matrix()(idx[static_cast<std::size_t>(x)], idx[static_cast<std::size_t>(y)]);
    for (int out = 0; out <= total; ++out) {
      Eigen::VectorXcd u(s);
      for (Eigen::Index x = 0; x < s; ++x) {
        const int n1 = na[static_cast<std::size_t>(x)];
        u(x) = beam_splitter_amplitude(n1, total - n1, out, total - out, spec.reflectivity);
      }
      dist[static_cast<std::size_t>(out)] += (u.adjoint() * block * u)(0).real();
    }
  }
  return dist;
}

}  // namespace nlasim
