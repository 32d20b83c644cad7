// Copyright 2026 The qvk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "qvk/simulator.hpp"
#include "test_util.hpp"

using namespace qvk;
using namespace qvk::test;

namespace {

VerificationStrategy bell_strategy() {
  return two_setting_protocol(BipartiteState{bell_phi_plus(), 2, 2});
}

double binomial_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

}  // namespace

TEST_SUITE_BEGIN("simulator");

TEST_CASE("an ideal source passes every trial") {
  const SimReport rep =
      run_state_verification(bell_strategy(), {}, 20000, 123);
  CHECK(rep.passes == rep.trials);
  CHECK(rep.analytic_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the depolarized Bell source matches the closed-form rate") {
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::DepolarizingState;
  noise.p = 0.1;
  const std::uint64_t trials = 100000;
  const SimReport rep = run_state_verification(bell_strategy(), noise, trials,
                                               987654321);
  CHECK(rep.analytic_bound == doctest::Approx(0.9625).epsilon(1e-12));
  const double sigma = binomial_sigma(0.9625, static_cast<double>(trials));
  CHECK(std::abs(rep.empirical_pass_rate - 0.9625) < 3.0 * sigma);
  // both tests get drawn roughly evenly
  CHECK(rep.per_test.size() == 2);
  CHECK(rep.per_test[0].draws + rep.per_test[1].draws == trials);
  CHECK(std::abs(static_cast<double>(rep.per_test[0].draws) / trials - 0.5) <
        3.0 * binomial_sigma(0.5, static_cast<double>(trials)));
}

TEST_CASE("an orthogonal source never passes a unit-gap strategy") {
  const VerificationStrategy strat =
      two_setting_protocol(BipartiteState{CVector::basis(4, 0), 2, 2});
  REQUIRE(strat.nu == doctest::Approx(1.0));
  // generator rotating |00> fully onto |01>
  CMatrix g(4, 4);
  g(0, 1) = Complex{0.0, -1.0};
  g(1, 0) = Complex{0.0, 1.0};
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::UnitaryPerturbation;
  noise.strength = kPi / 2.0;
  noise.generator = g;
  const SimReport rep = run_state_verification(strat, noise, 5000, 5);
  CHECK(rep.passes == 0);
  CHECK(rep.analytic_bound == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gate verification of the target channel always passes") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cnot});
  const SimReport rep = run_gate_verification(p, {}, 20000, 42);
  CHECK(rep.passes == rep.trials);
}

TEST_CASE("depolarizing channel rates agree with the analytic value") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cnot});
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::DepolarizingChannel;
  noise.p = 0.05;
  const std::uint64_t trials = 100000;
  const SimReport rep = run_gate_verification(p, noise, trials, 777);
  const QuantumChannel channel = QuantumChannel::depolarizing(p.target, 0.05);
  const double expect = pass_probability(p, channel);
  CHECK(rep.analytic_bound == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(rep.empirical_pass_rate - expect) <
        3.0 * binomial_sigma(expect, static_cast<double>(trials)));
}

TEST_CASE("a zero-strength perturbation is the target") {
  const GateProtocol p =
      build_protocol(CanonicalAngles{kPi / 8.0, kPi / 8.0, kPi / 8.0});
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::UnitaryPerturbation;
  noise.strength = 0.0;
  const SimReport rep = run_gate_verification(p, noise, 5000, 9);
  CHECK(rep.passes == rep.trials);
}

TEST_CASE("identical seeds reproduce identical reports") {
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::DepolarizingState;
  noise.p = 0.2;
  const SimReport a = run_state_verification(bell_strategy(), noise, 30000, 11);
  const SimReport b = run_state_verification(bell_strategy(), noise, 30000, 11);
  CHECK(a.passes == b.passes);
  REQUIRE(a.per_test.size() == b.per_test.size());
  for (std::size_t i = 0; i < a.per_test.size(); ++i) {
    CHECK(a.per_test[i].draws == b.per_test[i].draws);
    CHECK(a.per_test[i].passes == b.per_test[i].passes);
  }
  const SimReport c = run_state_verification(bell_strategy(), noise, 30000, 12);
  CHECK(a.passes != c.passes);  // different stream
}

TEST_CASE("the worst-case source saturates the pass-probability bound") {
  const VerificationStrategy strat = bell_strategy();
  for (double eps : {0.05, 0.1, 0.3}) {
    const CMatrix rho = worst_case_density(strat, eps);
    const double pass = (strat.omega * rho).trace().real();
    CHECK(std::abs(pass - (1.0 - strat.nu * eps)) < 1e-9);
  }
}

TEST_CASE("sample complexity: unit-gap strategy needs a single test") {
  const VerificationStrategy strat =
      two_setting_protocol(BipartiteState{CVector::basis(4, 0), 2, 2});
  const SampleComplexityReport rep =
      empirical_sample_complexity(strat, 0.5, 0.5, 40000, 21);
  CHECK(rep.analytic_n == 1);
  CHECK(std::abs(rep.empirical_accept_rate - 0.5) <
        3.0 * binomial_sigma(0.5, 40000.0));
}

TEST_CASE("sample complexity: the Bell strategy meets its significance level") {
  const SampleComplexityReport rep =
      empirical_sample_complexity(bell_strategy(), 0.1, 0.05, 4000, 22);
  CHECK(rep.analytic_n == 204);
  CHECK(rep.empirical_accept_rate <=
        0.05 + 3.0 * binomial_sigma(0.05, 4000.0));
}

TEST_CASE("a perfect source is always accepted regardless of N") {
  const SampleComplexityReport rep = empirical_sample_complexity(
      bell_strategy(), 0.1, 0.05, 2000, 23, /*source_eps=*/0.0);
  CHECK(rep.empirical_accept_rate == doctest::Approx(1.0));
}

TEST_CASE("explicit Choi-matrix channels drive gate runs") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cnot});
  NoiseModel noise;
  noise.kind = NoiseModel::Kind::ChoiChannel;
  noise.choi = QuantumChannel::depolarizing(p.target, 0.08).choi();
  const SimReport rep = run_gate_verification(p, noise, 50000, 88);
  const double expect = 1.0 - 0.75 * 0.08;
  CHECK(rep.analytic_bound == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(rep.empirical_pass_rate - expect) <
        4.0 * binomial_sigma(expect, 50000.0));
  // invalid Choi input is rejected up front
  NoiseModel bad;
  bad.kind = NoiseModel::Kind::ChoiChannel;
  bad.choi = CMatrix::identity(16);
  bad.choi.value()(0, 0) = 3.0;
  CHECK_THROWS_AS(run_gate_verification(p, bad, 10, 1), NotCPTP);
}

TEST_CASE("mismatched noise kinds are rejected") {
  NoiseModel channel_noise;
  channel_noise.kind = NoiseModel::Kind::DepolarizingChannel;
  channel_noise.p = 0.1;
  CHECK_THROWS_AS(
      run_state_verification(bell_strategy(), channel_noise, 10, 1), Error);
  NoiseModel state_noise;
  state_noise.kind = NoiseModel::Kind::DepolarizingState;
  state_noise.p = 0.1;
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cz});
  CHECK_THROWS_AS(run_gate_verification(p, state_noise, 10, 1), Error);
}

TEST_SUITE_END();
