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

#include "qvk/gate_protocol.hpp"
#include "qvk/identification_sets.hpp"
#include "qvk/rng.hpp"
#include "test_util.hpp"

using namespace qvk;
using namespace qvk::test;

namespace {

const double kTwoSettingGap = (1.0 - std::sqrt(0.5)) / 2.0;

CMatrix perturbed_unitary(const CMatrix& u, double strength, CounterRng& rng) {
  CMatrix g = random_hermitian(4, rng);
  g *= Complex{strength, 0.0};
  return hermitian_exp_minus_i(g) * u;
}

}  // namespace

TEST_SUITE_BEGIN("gateprotocol");

TEST_CASE("mu of the library gates and canonical samples") {
  CHECK(mu(gate_matrix({GateKind::Cnot})) == 4);
  CHECK(mu(gate_matrix({GateKind::Cz})) == 4);
  CHECK(mu(gate_matrix({GateKind::Swap})) == 4);
  CHECK(mu(CMatrix::identity(4)) == 4);
  CHECK(mu(build_canonical({kPi / 8.0, kPi / 8.0, kPi / 8.0})) == 5);
  CHECK(mu(build_canonical(
            {3.0 * kPi / 8.0, 3.0 * kPi / 8.0, kPi / 8.0})) == 5);
}

TEST_CASE("general bipartite setting bounds") {
  CHECK(mu_bounds_general(2, 2) == std::pair<int, int>{4, 8});
  CHECK(mu_bounds_general(2, 3) == std::pair<int, int>{6, 12});
  CHECK(mu_bounds_general(3, 3) == std::pair<int, int>{9, 18});
  CHECK_THROWS_AS(mu_bounds_general(1, 3), Error);
}

TEST_CASE("setting count from the product-span dimension") {
  CHECK(mu_from_dprod(4, 3, false) == 5);
  CHECK(mu_from_dprod(4, 4, true) == 4);
  CHECK(mu_from_dprod(4, 4, false) == 5);
  CHECK(mu_from_dprod(4, 0, false) == 8);
  CHECK_THROWS_AS(mu_from_dprod(4, 5, true), Error);
}

TEST_CASE("the CNOT protocol uses the published set with unit gaps") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cnot});
  CHECK(p.tests.size() == 4);
  CHECK(p.setting_count == 4);
  CHECK(p.classification == RegionKind::SEF);
  for (const auto& t : p.tests) {
    CHECK(t.probability == doctest::Approx(0.25));
    CHECK(t.strategy.nu == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(t.setting_count == 1);
  }
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("the equal-angle protocol has five settings and the stated gaps") {
  const GateProtocol p = build_protocol(CanonicalAngles{kPi / 8.0, kPi / 8.0,
                                                        kPi / 8.0});
  CHECK(p.tests.size() == 4);
  CHECK(p.setting_count == 5);
  CHECK(p.classification == RegionKind::SE);
  int unit_gaps = 0;
  int entangled = 0;
  for (const auto& t : p.tests) {
    if (t.setting_count == 1) {
      ++unit_gaps;
      CHECK(t.strategy.nu == doctest::Approx(1.0).epsilon(1e-10));
    } else {
      ++entangled;
      CHECK(t.setting_count == 2);
      CHECK(t.strategy.nu == doctest::Approx(kTwoSettingGap).epsilon(1e-9));
    }
  }
  CHECK(unit_gaps == 3);
  CHECK(entangled == 1);
}

TEST_CASE("SWAP gets a four-setting protocol from the wall set") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Swap});
  CHECK(p.setting_count == 4);
  for (const auto& t : p.tests) CHECK(t.strategy.nu == doctest::Approx(1.0));
}

TEST_CASE("protocol test states always identify the target") {
  for (const CanonicalAngles a :
       {CanonicalAngles{kPi / 8.0, kPi / 16.0, 0.0},
        CanonicalAngles{kPi / 8.0, kPi / 8.0, kPi / 8.0},
        CanonicalAngles{kPi / 4.0, kPi / 4.0, kPi / 8.0},
        CanonicalAngles{0.0, 0.0, 0.0}}) {
    const GateProtocol p = build_protocol(a);
    StateSet inputs;
    for (const auto& t : p.tests) inputs.states.push_back(t.input);
    CHECK(is_connected_spanning(inputs).is_identification_set());
    CHECK(p.setting_count == mu(build_canonical(a)));
  }
}

TEST_CASE("matrix-path synthesis recognizes library and canonical targets") {
  const GateProtocol cnot = build_protocol(gate_matrix({GateKind::Cnot}));
  CHECK(cnot.setting_count == 4);

  CMatrix cphase = CMatrix::identity(4);
  cphase(3, 3) = std::exp(Complex{0.0, kPi / 3.0});
  CHECK(build_protocol(cphase).setting_count == 4);

  const CanonicalAngles a{kPi / 8.0, kPi / 16.0, kPi / 32.0};
  CMatrix u = build_canonical(a);
  u *= std::exp(Complex{0.0, 0.7});  // global phase must not matter
  const GateProtocol p = build_protocol(u);
  CHECK(p.setting_count == 4);
  CHECK(max_entry_diff(p.target, u) == 0.0);

  const GateProtocol pc = build_protocol(build_canonical(a).conjugate());
  CHECK(pc.setting_count == 4);
}

TEST_CASE("matrix-path synthesis rejects dressed unitaries") {
  CounterRng rng(70);
  const CMatrix dressed =
      kron(random_unitary(2, rng), random_unitary(2, rng)) *
      build_canonical({kPi / 8.0, kPi / 16.0, kPi / 32.0});
  CHECK_THROWS_AS(build_protocol(dressed), SynthesisFailed);
  CMatrix notu(4, 4);
  CHECK_THROWS_AS(build_protocol(notu), NotUnitary);
}

TEST_CASE("the target channel passes every protocol with certainty") {
  for (const CanonicalAngles a : {CanonicalAngles{kPi / 8.0, kPi / 16.0, 0.0},
                                  CanonicalAngles{kPi / 8.0, kPi / 8.0,
                                                  kPi / 8.0}}) {
    const GateProtocol p = build_protocol(a);
    const QuantumChannel ideal = QuantumChannel::from_unitary(p.target);
    CHECK(pass_probability(p, ideal) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("depolarizing pass probability matches the closed form") {
  const GateProtocol p = build_protocol(GateSpec{GateKind::Cnot});
  const double prob = 0.1;
  const QuantumChannel noisy = QuantumChannel::depolarizing(p.target, prob);
  double expect = 0.0;
  for (const auto& t : p.tests)
    expect += t.probability *
              (1.0 - prob * (1.0 - t.strategy.omega.trace().real() / 4.0));
  CHECK(pass_probability(p, noisy) == doctest::Approx(expect).epsilon(1e-12));
  // EFMIS tests have rank-one operators, so the value is 1 - 3p/4
  CHECK(expect == doctest::Approx(1.0 - 0.75 * prob).epsilon(1e-12));
}

TEST_CASE("perturbed unitaries cannot pass with certainty") {
  CounterRng rng(71);
  const GateProtocol p =
      build_protocol(CanonicalAngles{kPi / 8.0, kPi / 8.0, kPi / 8.0});
  for (int it = 0; it < 20; ++it) {
    const CMatrix wrong = perturbed_unitary(p.target, 1e-2, rng);
    const double pass =
        pass_probability(p, QuantumChannel::from_unitary(wrong));
    CHECK(pass < 1.0 - 1e-6);
    CHECK(pass > 0.5);
  }
}

TEST_CASE("channel construction validates CPTP and rejects junk") {
  CMatrix junk = CMatrix::identity(16);
  junk(0, 0) = 2.0;  // breaks trace preservation
  CHECK_THROWS_AS(QuantumChannel::from_choi(junk), NotCPTP);
  CMatrix negative(16, 16);
  negative(0, 0) = -1.0;
  CHECK_THROWS_AS(QuantumChannel::from_choi(negative), NotCPTP);
  // round trip through the Choi matrix preserves the action
  const QuantumChannel direct =
      QuantumChannel::depolarizing(gate_matrix({GateKind::Cz}), 0.3);
  const QuantumChannel reloaded = QuantumChannel::from_choi(direct.choi());
  CounterRng rng(72);
  const CVector psi = random_state(4, rng);
  const CMatrix rho = outer(psi, psi);
  CHECK(max_entry_diff(direct.apply(rho), reloaded.apply(rho)) < 1e-12);
}

TEST_CASE("local frames leave the per-test gaps unchanged") {
  CounterRng rng(73);
  const CanonicalAngles a{kPi / 8.0, kPi / 8.0, kPi / 8.0};
  const GateProtocol base = build_protocol(a);
  const CMatrix pre = kron(random_unitary(2, rng), random_unitary(2, rng));
  const CMatrix post = kron(random_unitary(2, rng), random_unitary(2, rng));
  const CMatrix dressed_target = post * base.target * pre;
  // map the test states through the inverse input frame and rebuild each
  // output strategy by the same dispatch
  for (const auto& t : base.tests) {
    const CVector input = pre.adjoint().apply(t.input);
    const CVector output = dressed_target.apply(input);
    double nu;
    if (concurrence(output) < 1e-10) {
      const ProductFactors f = product_factors(input, dressed_target);
      nu = single_projector_strategy(f.output_a, f.output_b).nu;
    } else {
      nu = two_setting_protocol(BipartiteState(output, 2, 2)).nu;
    }
    CHECK(nu == doctest::Approx(t.strategy.nu).epsilon(1e-9));
  }
}

TEST_SUITE_END();
