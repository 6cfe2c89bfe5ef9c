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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "nlasim/analysis.hpp"
#include "nlasim/errors.hpp"
#include "nlasim/optics.hpp"
#include "oracle.hpp"

namespace nlasim {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> sample(const std::vector<double>& phases, double offset, double amp, double shift) {
  std::vector<double> v;
  for (double p : phases) v.push_back(offset + amp * std::cos(p - shift));
  return v;
}

TEST(HarmonicFit, TrivialSignals) {
  const auto grid = InterferometerConfig::uniform_phase_grid(24);
  EXPECT_NEAR(fit_harmonic(grid, sample(grid, 0.4, 0.0, 0.0)).visibility, 0.0, 1e-14);
  EXPECT_NEAR(fit_harmonic(grid, sample(grid, 0.5, 0.5, 0.0)).visibility, 1.0, 1e-14);
  const HarmonicFit f = fit_harmonic(grid, sample(grid, 0.6, 0.3, 0.7));
  EXPECT_NEAR(f.visibility, 0.5, 1e-14);
  EXPECT_NEAR(f.offset, 0.6, 1e-14);
  EXPECT_NEAR(f.amplitude, 0.3, 1e-14);
  EXPECT_NEAR(f.phase, -0.7, 1e-13);
  EXPECT_LT(f.residual, 1e-13);
}

TEST(HarmonicFit, NonUniformGridAndErrors) {
  const std::vector<double> grid{0.1, 0.9, 2.0, 3.3, 4.1, 5.9};
  EXPECT_NEAR(fit_harmonic(grid, sample(grid, 1.0, 0.2, -1.0)).visibility, 0.2, 1e-13);
  EXPECT_THROW(fit_harmonic({0.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(fit_harmonic({0.0, 1.0, 2.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST(Interferometer, BalancedArmsGiveUnitVisibility) {
  for (double eta : {1.0 / 3, 0.25, 0.2}) {
    InterferometerConfig c;
    c.eta = eta;
    c.sigma = 1 - eta;
    c.tau = 0.5;
    for (const FringeData& f : run_interferometer(c)) EXPECT_NEAR(visibility(f), 1.0, 1e-9) << eta;
  }
}

TEST(Interferometer, EqualSplittersGiveGeometricVisibility) {
  // sigma = tau = 1 - eta leaves amplitudes sqrt(eta) and sqrt(1 - eta) on the click port.
  for (double eta : {1.0 / 3, 0.25, 0.2}) {
    InterferometerConfig c;
    c.eta = eta;
    c.sigma = c.tau = 1 - eta;
    EXPECT_NEAR(visibility(run_interferometer(c)[0]), 2 * std::sqrt(eta * (1 - eta)), 1e-9);
  }
}

TEST(Interferometer, BranchesAreOffsetByPi) {
  InterferometerConfig c;
  const auto fringes = run_interferometer(c);
  ASSERT_EQ(fringes.size(), 2u);
  EXPECT_EQ(fringes[0].branch, FringeBranch::kD2);
  EXPECT_EQ(fringes[1].branch, FringeBranch::kD3);
  const double d = std::remainder(fit_fringe(fringes[0]).phase - fit_fringe(fringes[1]).phase, 2 * kPi);
  EXPECT_NEAR(std::abs(d), kPi, 1e-9);
  EXPECT_NEAR(fringes[0].herald_probability, fringes[1].herald_probability, 1e-15);
}

TEST(Interferometer, UnconditionedFringeHasNoVisibility) {
  InterferometerConfig c;
  c.heralded = false;
  const auto fringes = run_interferometer(c);
  ASSERT_EQ(fringes.size(), 1u);
  EXPECT_EQ(fringes[0].branch, FringeBranch::kUnconditioned);
  EXPECT_LE(visibility(fringes[0]), 1e-10);
  EXPECT_EQ(fringes[0].herald_probability, 1.0);
}

TEST(Interferometer, ClickProbabilityStaysInUnitInterval) {
  InterferometerConfig c;
  c.input = InputModel::kPhaseAveragedCoherent;
  c.epsilon = 0.8;
  for (const FringeData& f : run_interferometer(c))
    for (const FringePoint& p : f.points) {
      EXPECT_GE(p.click_probability, 0.0);
      EXPECT_LE(p.click_probability, 1.0);
      EXPECT_LE(p.single_photon_probability, p.click_probability + 1e-15);
    }
}

TEST(Interferometer, ValidationRejectsBadParameters) {
  InterferometerConfig c;
  c.sigma = 1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.phase_grid = {0.0, 1.0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.input_mean_photon = -0.1;
  EXPECT_THROW(run_interferometer(c), std::invalid_argument);
}

TEST(VisibilityVsTau, PeaksWhereArmsBalance) {
  std::vector<double> taus;
  for (int k = 1; k < 100; ++k) taus.push_back(k / 100.0);
  for (double eta : {0.2, 0.5}) {
    InterferometerConfig c;
    c.eta = eta;
    c.sigma = 0.5;
    const auto curve = visibility_vs_tau(c, taus);
    const auto best = std::max_element(curve.begin(), curve.end(), [](const TauPoint& a, const TauPoint& b) {
      return a.visibility_d2 < b.visibility_d2;
    });
    EXPECT_NEAR(best->tau, 1 - eta, 1e-12);
    for (const TauPoint& p : curve) EXPECT_NEAR(p.visibility_d2, p.visibility_d3, 1e-12);
  }
}

TEST(Concurrence, Examples) {
  EXPECT_NEAR(concurrence({0.0, 0.5, 0.5, 0.0, 0.5, ConcurrenceNormalization::kPhotonSubspace}), 1.0, 1e-15);
  EXPECT_EQ(concurrence({0.9, 0.05, 0.05, 0.0, 0.0}), 0.0);
  EXPECT_NEAR(concurrence({0.9, 0.05, 0.05, 1e-4, 0.05}), 2 * (0.05 - std::sqrt(0.9e-4)), 1e-15);
  EXPECT_EQ(concurrence({0.9, 0.05, 0.05, 0.01, 0.01}), 0.0);
  EXPECT_THROW(concurrence({0.9, 0.05, 0.05, 0.0, 0.06}), std::invalid_argument);
  EXPECT_THROW(concurrence({0.5, 0.2, 0.2, 0.2, 0.1, ConcurrenceNormalization::kPhotonSubspace}),
               std::invalid_argument);
}

TEST(Concurrence, InputsFromPureDualRailState) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = std::sqrt(0.9);
  v(1) = std::sqrt(0.06);
  v(2) = Complex(0, std::sqrt(0.04));
  const DensityOperator rho = to_density(FockState(Basis::uniform(2, 1), v));
  const ConcurrenceInputs abs_in = concurrence_inputs(rho, 0.0, ConcurrenceNormalization::kAbsolute);
  EXPECT_NEAR(abs_in.p10, 0.04, 1e-15);
  EXPECT_NEAR(abs_in.p01, 0.06, 1e-15);
  EXPECT_NEAR(concurrence(abs_in), 2 * std::sqrt(0.0024), 1e-15);
  const ConcurrenceInputs sub = concurrence_inputs(rho, 1e-3, ConcurrenceNormalization::kPhotonSubspace);
  EXPECT_NEAR(sub.p00 + sub.p10 + sub.p01 + sub.p11, 1.0, 1e-15);
}

TEST(Concurrence, OperatingPointIncreasesEntanglement) {
  const ConcurrenceReport r = concurrence_report(InterferometerConfig{}, 2.9e-4);
  EXPECT_NEAR(r.c_in_absolute, 0.08, 1e-12);
  EXPECT_GT(r.c_out_absolute, r.c_in_absolute);
  EXPECT_GT(r.c_out_subspace, r.c_in_subspace);
  EXPECT_GT(r.c_out_first_order, r.c_in_absolute);
}

TEST(Concurrence, UnitGainLeavesConcurrenceUnchanged) {
  InterferometerConfig c;
  c.eta = 0.5;
  const ConcurrenceReport r = concurrence_report(c, 0.0);
  EXPECT_NEAR(r.c_out_absolute, r.c_in_absolute, 1e-12);
  EXPECT_NEAR(r.c_out_subspace, r.c_in_subspace, 1e-12);
}

TEST(LinearAmplifier, MatchesTwoModeSqueezerWithVacuumAncilla) {
  const int c = 24;
  const double gain = 2.0;
  const Eigen::MatrixXd u = oracle::two_mode_squeezer(std::acosh(std::sqrt(gain)), c);
  for (const FockState& in : {number_state(1, 2), coherent_state(Complex(0.3, 0.2), 3)}) {
    Eigen::VectorXcd joint = Eigen::VectorXcd::Zero((c + 1) * (c + 1));
    for (int n = 0; n <= in.basis().cutoff(0); ++n) joint(n * (c + 1)) = in.amplitude({n});
    const Eigen::VectorXcd out = u * joint;
    const DensityOperator amp = linear_amplifier_channel(to_density(in), 0, gain);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        Complex expected = 0.0;
        for (int k = 0; k <= c; ++k) expected += out(n * (c + 1) + k) * std::conj(out(m * (c + 1) + k));
        EXPECT_NEAR(std::abs(amp.element({n}, {m}) - expected), 0.0, 1e-8) << n << "," << m;
      }
  }
}

TEST(LinearAmplifier, GainExamples) {
  const DensityOperator vac = to_density(number_state(0, 1));
  EXPECT_LT((linear_amplifier_channel(vac, 0, 1.0).matrix() - vac.matrix()).norm(), 1e-15);
  EXPECT_NEAR(mean_photon(linear_amplifier_channel(vac, 0, 2.0), 0), 1.0, 1e-10);
  const DensityOperator coh = to_density(coherent_state(Complex(0.1, 0), 6, Normalization::kExact));
  EXPECT_NEAR(mean_photon(linear_amplifier_channel(coh, 0, 4.0), 0), 3.04, 1e-9);
  EXPECT_NEAR(linear_amplifier_channel(coh, 0, 4.0).trace(), 1.0, 1e-12);
  EXPECT_THROW(linear_amplifier_channel(vac, 0, 0.5), std::invalid_argument);
}

TEST(LinearAmplifier, ReferenceVisibilitiesStayBelowHeraldedFringe) {
  InterferometerConfig c;
  c.sigma = 0.5;
  c.tau = 0.8;
  c.epsilon = 0.8;
  const double nla = visibility(run_interferometer(c)[0]);
  const auto candidates = linear_amp_visibility_reference(c, c.stage().gain());
  ASSERT_FALSE(candidates.empty());
  for (const auto& cand : candidates) {
    EXPECT_LT(cand.visibility, nla) << cand.model;
    EXPECT_GE(cand.visibility, 0.0) << cand.model;
  }
}

TEST(GainFromCounts, ExamplesAndDetectorInvariance) {
  EXPECT_NEAR(gain_from_counts(0.02, 0.06), 3.0, 1e-15);
  EXPECT_TRUE(detector_efficiency_invariance(0.02, 0.06, 0.3));
  EXPECT_TRUE(detector_efficiency_invariance(1e-5, 4e-5, 0.05));
  EXPECT_THROW(gain_from_counts(0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(detector_efficiency_invariance(0.02, 0.06, 0.0), std::invalid_argument);
}

TEST(Epr, AnalyticModeScalesChi) {
  const EprResult r = epr_distill(0.3, NlaConfig{1, 0.2}, EprMode::kAnalytic);
  EXPECT_NEAR(r.chi_prime, 0.6, 1e-12);
  for (double ratio : r.ratios) EXPECT_NEAR(ratio, 0.6, 1e-10);
  EXPECT_GT(r.entropy_out, r.entropy_in);
  EXPECT_THROW(epr_distill(0.5, NlaConfig{1, 0.2}, EprMode::kAnalytic), std::domain_error);
  EXPECT_THROW(epr_distill(1.0, NlaConfig{1, 0.2}, EprMode::kAnalytic), std::invalid_argument);
}

TEST(Epr, AutomaticCutoffIsBounded) {
  EXPECT_THROW(epr_distill(0.45, NlaConfig{1, 0.2}, EprMode::kAnalytic), TruncationError);
  NlaConfig explicit_cutoff{1, 0.2, 12};
  EXPECT_NO_THROW(epr_distill(0.45, explicit_cutoff, EprMode::kAnalytic));
}

TEST(Epr, ZeroSqueezingHasNoEntanglement) {
  const EprResult r = epr_distill(0.0, NlaConfig{1, 0.2}, EprMode::kAnalytic);
  EXPECT_NEAR(r.entropy_in, 0.0, 1e-12);
  EXPECT_NEAR(r.entropy_out, 0.0, 1e-12);
}

TEST(Epr, SingleStageCircuitOnQubitCutoff) {
  const EprResult r = epr_distill(0.3, NlaConfig{1, 0.2}, EprMode::kCircuit);
  ASSERT_EQ(r.ratios.size(), 1u);
  EXPECT_NEAR(r.ratios[0], 0.6, 1e-10);
  EXPECT_GT(r.entropy_out, r.entropy_in);
  // Qubit-truncated input (|00> + chi |11>)/sqrt(1 + chi^2), herald rate eta (1 + g^2 chi^2)/(1 + chi^2).
  EXPECT_NEAR(r.probability, 0.2 * (1 + 0.36) / (1 + 0.09), 1e-12);
  EXPECT_NEAR(r.state.purity(), 1.0, 1e-12);
}

}  // namespace
}  // namespace nlasim
