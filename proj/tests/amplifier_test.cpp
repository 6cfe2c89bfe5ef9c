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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "nlasim/amplifier.hpp"
#include "nlasim/optics.hpp"
#include "oracle.hpp"

namespace nlasim {
namespace {

// (1 + s g a a+)|0> scaled by sqrt(eta/2) e^{-|a|^2/2}: the first-order branch state.
Eigen::VectorXcd first_order_branch(Complex alpha, double eta, double sign, int cutoff) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
  const double g = std::sqrt((1 - eta) / eta);
  v(0) = 1.0;
  v(1) = sign * g * alpha;
  return v * std::sqrt(eta / 2) * std::exp(-std::norm(alpha) / 2);
}

// e^{-|a|^2/2} eta^{N/2} (1 + g a a+/N)^N |0>, expanded term by term.
Eigen::VectorXcd recombined(Complex alpha, double eta, int n_stages, int cutoff) {
  const double g = std::sqrt((1 - eta) / eta);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
  for (int n = 0; n <= std::min(n_stages, cutoff); ++n) {
    const double binom = oracle::factorial(n_stages) / (oracle::factorial(n) * oracle::factorial(n_stages - n));
    v(n) = binom * std::pow(g * alpha / static_cast<double>(n_stages), n) * std::sqrt(oracle::factorial(n));
  }
  return v * std::exp(-std::norm(alpha) / 2) * std::pow(eta, n_stages / 2.0);
}

double overlap_fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

TEST(AnalyticGain, Examples) {
  EXPECT_NEAR(analytic_gain(1.0 / 3), 2.0, 1e-15);
  EXPECT_EQ(analytic_gain(0.5), 1.0);
  EXPECT_NEAR(analytic_gain(0.2), 4.0, 1e-15);
  EXPECT_THROW(analytic_gain(0.0), std::invalid_argument);
  EXPECT_THROW(analytic_gain(1.0), std::invalid_argument);
}

TEST(Stage, VacuumInputHeraldsVacuumAtEtaOverTwo) {
  for (const auto& o : amplifier_stage(number_state(0, 2), StageConfig{0.25})) {
    EXPECT_NEAR(o.probability, 0.125, 1e-15);
    EXPECT_NEAR(std::norm(o.state.amplitude({0})), 1.0, 1e-15);
  }
}

TEST(Stage, SmallCoherentInputTruncatesToFirstOrder) {
  const FockState in = coherent_state(Complex(0.1, 0), 6, Normalization::kExact);
  const auto out = amplifier_stage(in, StageConfig{0.25});
  for (const auto& o : out) {
    const double p1 = std::norm(o.state.amplitude({1}));
    EXPECT_NEAR(p1, 0.03 / 1.03, 1e-12);
  }
  EXPECT_NEAR(std::norm(out[0].state.amplitude({1})), 0.0291262136, 1e-10);
}

TEST(Stage, BranchStatesMatchClosedFormOnAGrid) {
  for (double eta : {1.0 / 3, 0.25, 0.2, 0.4}) {
    for (Complex alpha : {Complex(0.05, 0), Complex(0.1, 0.1), Complex(-0.2, 0.05)}) {
      const FockState in = coherent_state(alpha, 6, Normalization::kExact);
      for (const auto& o : amplifier_stage(in, StageConfig{eta})) {
        const double sign = o.branch == Branch::kD2 ? 1.0 : -1.0;
        const Eigen::VectorXcd expected = first_order_branch(alpha, eta, sign, 6);
        EXPECT_NEAR(o.probability, expected.squaredNorm(), 1e-12);
        EXPECT_NEAR(overlap_fidelity(o.state.amplitudes(), expected), 1.0, 1e-12);
      }
    }
  }
}

TEST(Stage, NumberStateOneIsPassedWithProbabilityOneMinusEta) {
  const auto out = amplifier_stage(number_state(1, 2), StageConfig{0.25});
  double total = 0.0;
  for (const auto& o : out) {
    total += o.probability;
    EXPECT_NEAR(std::norm(o.state.amplitude({1})), 1.0, 1e-14);
  }
  EXPECT_NEAR(total, 0.75, 1e-14);
  for (const auto& o : amplifier_stage(number_state(2, 2), StageConfig{0.25})) EXPECT_EQ(o.probability, 0.0);
}

TEST(Stage, FeedforwardMakesBranchesEqual) {
  const FockState in = coherent_state(Complex(0.1, 0), 5);
  const auto out = amplifier_stage(in, StageConfig{0.2});
  const auto d2 = feedforward_correct(out[0]);
  const auto d3 = feedforward_correct(out[1]);
  EXPECT_EQ(d2.state.amplitudes(), out[0].state.amplitudes());
  EXPECT_NEAR(fidelity(d2.state, d3.state), 1.0, 1e-12);
  for (int n = 0; n <= 5; ++n) {
    const double parity = n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_LT(std::abs(d3.state.amplitude({n}) - parity * out[1].state.amplitude({n})), 1e-14);
  }
}

TEST(Stage, PhaseSymmetricInputHasEqualBranchProbabilities) {
  const auto out = amplifier_stage(phase_averaged_coherent(0.3, 6), StageConfig{0.25});
  EXPECT_NEAR(out[0].probability, out[1].probability, 1e-15);
}

TEST(Stage, MultimodeStageActsOnChosenModeOnly) {
  const FockState in = tensor(number_state(1, 1), coherent_state(Complex(0.1, 0), 4, Normalization::kExact));
  const auto out = amplifier_stage(in, 1, StageConfig{0.2});
  EXPECT_EQ(out[0].state.basis().cutoffs(), (std::vector<int>{1, 4}));
  const Eigen::VectorXcd expected = first_order_branch(Complex(0.1, 0), 0.2, 1.0, 4);
  EXPECT_NEAR(out[0].probability, expected.squaredNorm(), 1e-13);
  EXPECT_NEAR(std::norm(out[0].state.amplitude({1, 1})), std::norm(expected(1)) / expected.squaredNorm(), 1e-13);
}

TEST(Stage, PureOverloadRejectsLossyAncilla) {
  EXPECT_THROW(amplifier_stage(number_state(0, 2), StageConfig{0.25, 0.5, 0.8}), std::invalid_argument);
  EXPECT_THROW(amplifier_stage(number_state(0, 2), StageConfig{1.2}), std::invalid_argument);
  EXPECT_THROW(amplifier_stage(FockState::vacuum(Basis::uniform(1, 0)), StageConfig{0.25}), std::invalid_argument);
}

TEST(StageGain, IdealOddsGainIsExact) {
  for (double eta : {1.0 / 3, 0.25, 0.2})
    for (double mag : {0.01, 0.1, 0.5}) {
      const StageGain g = measure_stage_gain(phase_averaged_coherent(mag, 8), StageConfig{eta});
      EXPECT_NEAR(g.odds_gain, analytic_gain(eta), 1e-9);
      EXPECT_LT(g.mean_photon_gain, analytic_gain(eta));
    }
}

TEST(StageGain, LossyAncillaReproducesAdjustedFormula) {
  for (double eta : {1.0 / 3, 0.25, 0.2})
    for (double eps : {0.8, 0.5}) {
      const double m = 0.02;
      const StageGain g = measure_stage_gain(phase_averaged_coherent(std::sqrt(m), 8), StageConfig{eta, 0.5, eps});
      // The stage sees the odds p1/p0 of the input, which is |alpha'|^2 here.
      EXPECT_NEAR(g.odds_gain, adjusted_gain(eta, m, eps), 1e-8);
    }
}

TEST(AdjustedGain, Examples) {
  EXPECT_NEAR(adjusted_gain(0.25, 0.02, 1.0), 3.0, 1e-15);
  EXPECT_NEAR(adjusted_gain(1.0 / 3, 0.02, 0.8), 2.0 / 1.015, 1e-12);
  EXPECT_NEAR(adjusted_gain(0.2, 0.02, 0.8), 4.0 / 1.025, 1e-12);
  EXPECT_THROW(adjusted_gain(0.2, 0.02, 0.0), std::invalid_argument);
}

TEST(Nla, SingleStageOnQubitInputMatchesStagePlusFeedforward) {
  Eigen::VectorXcd v(2);
  v << 0.8, Complex(0.36, 0.48);
  const FockState in(Basis::uniform(1, 1), v);
  const NlaResult full = nla_full(in, 0, NlaConfig{1, 0.25});
  const auto out = amplifier_stage(in, StageConfig{0.25});
  const FockState corrected = feedforward_correct(out[1]).state;
  EXPECT_NEAR(full.probability, out[0].probability + out[1].probability, 1e-14);
  EXPECT_NEAR(fidelity(corrected, full.state), 1.0, 1e-12);
  EXPECT_NEAR(full.state.purity(), 1.0, 1e-12);
}

TEST(Nla, UnnormalizedOutputMatchesRecombinationFormula) {
  const Complex alpha(0.2, 0.1);
  for (int n = 1; n <= 3; ++n) {
    const int cutoff = 4;
    const NlaResult r = nla_full(coherent_state(alpha, cutoff, Normalization::kExact), 0, NlaConfig{n, 0.2});
    const Eigen::VectorXcd phi = recombined(alpha, 0.2, n, cutoff);
    const Eigen::MatrixXcd expected = phi * phi.adjoint();
    EXPECT_LT((r.probability * r.state.matrix() - expected).cwiseAbs().maxCoeff(), 1e-9) << n;
    const FockState analytic = recombined_output_analytic(alpha, 0.2, n, cutoff);
    EXPECT_LT((analytic.amplitudes() - phi).norm(), 1e-14);
  }
}

TEST(Nla, ApproachesIdealAmplificationWithMoreStages) {
  double previous = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  const double limit = std::exp(0.12);
  for (int n = 1; n <= 3; ++n) {
    NlaConfig c{n, 0.2, 4};
    const NlaResult r = nla_full(Complex(0.2, 0), c);
    const double f = fidelity(coherent_state(Complex(0.4, 0), 4), r.state);
    EXPECT_GT(f, previous);
    previous = f;
    const double g = std::abs(r.probability / std::pow(0.2, n) - limit);
    EXPECT_LT(g, gap);
    gap = g;
  }
  EXPECT_GT(previous, 0.998);
}

TEST(Nla, DefaultCutoffAndValidation) {
  EXPECT_EQ(default_cutoff(0.0, 2.0), 4);
  EXPECT_EQ(default_cutoff(1.0, 2.0), 7);
  EXPECT_THROW(NlaConfig{0}.validate(), std::invalid_argument);
  NlaConfig bad;
  bad.source_efficiency = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(SuccessProbability, Examples) {
  EXPECT_NEAR(success_probability_analytic(Complex(0.7, 0), 1.0, 2), 0.25, 1e-15);
  EXPECT_NEAR(success_probability_analytic(Complex(std::sqrt(0.02), 0), std::sqrt(3.0), 1), 0.25 * std::exp(0.04),
              1e-12);
  EXPECT_NEAR(success_probability_analytic(Complex(0, 0), 2.0, 2), 0.04, 1e-15);
}

TEST(DistinguishabilityBound, Examples) {
  EXPECT_NEAR(distinguishability_bound(Complex(0.5, 0), 1.0), 1.0, 1e-15);
  EXPECT_NEAR(distinguishability_bound(Complex(1e-6, 0), 2.0), 0.25, 1e-6);
  EXPECT_EQ(distinguishability_bound(Complex(0, 0), 2.0), 0.25);
  EXPECT_NEAR(distinguishability_bound(Complex(1, 0), 2.0), (1 - std::exp(-1.0)) / (1 - std::exp(-4.0)), 1e-14);
  EXPECT_NEAR(distinguishability_bound(Complex(1, 0), 2.0), 0.6439, 1e-4);
}

TEST(LossySource, IdealSourceIsPure) {
  NlaConfig c{2, 0.25, 6};
  const NlaResult r = lossy_source_output(Complex(0.1, 0), c);
  EXPECT_NEAR(r.state.purity(), 1.0, 1e-12);
}

TEST(LossySource, MatchesCircuitWithLossyAncilla) {
  for (int n = 1; n <= 2; ++n) {
    NlaConfig c{n, 0.25, 6, 0.8};
    const NlaResult closed = lossy_source_output(Complex(0.1, 0), c);
    const NlaResult circuit = nla_full(coherent_state(Complex(0.1, 0), 6, Normalization::kExact), 0, c);
    EXPECT_NEAR(closed.state.purity(), circuit.state.purity(), 1e-8);
    EXPECT_NEAR(closed.probability, circuit.probability, 1e-8);
    EXPECT_LT((closed.state.matrix() - circuit.state.matrix()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(LossySource, SmallMixingWhenMarginIsLarge) {
  NlaConfig ideal{2, 0.2, 6};
  NlaConfig lossy = ideal;
  lossy.source_efficiency = 0.9;
  ASSERT_GT(mixing_condition_check(0.1, 0.2, 0.1), 10.0);
  EXPECT_GT(fidelity(lossy_source_output(Complex(0.1, 0), ideal).state,
                     lossy_source_output(Complex(0.1, 0), lossy).state),
            0.99);
}

TEST(MixingCondition, Examples) {
  EXPECT_EQ(mixing_condition_check(0.0, 0.2, 0.1), std::numeric_limits<double>::infinity());
  EXPECT_NEAR(mixing_condition_check(0.3, 0.2, 0.1), 20.0 / (0.3 / 0.7), 1e-12);
  EXPECT_NEAR(mixing_condition_check(0.3, 0.2, 0.1), 46.67, 0.01);
  EXPECT_THROW(mixing_condition_check(1.0, 0.2, 0.1), std::invalid_argument);
}

}  // namespace
}  // namespace nlasim
