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

#include <algorithm>
#include <cmath>

#include "qvk/canonical_form.hpp"
#include "qvk/rng.hpp"
#include "test_util.hpp"

using namespace qvk;
using namespace qvk::test;

namespace {

CMatrix literal_cnot() {
  CMatrix m(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

CMatrix literal_cz() {
  CMatrix m = CMatrix::identity(4);
  m(3, 3) = -1.0;
  return m;
}

CMatrix literal_swap() {
  CMatrix m(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

// exp(-i sum_k a_k sigma_k x sigma_k): independent route to the canonical
// unitary, used as the oracle for build_canonical.
CMatrix canonical_by_exponential(const CanonicalAngles& a) {
  CMatrix h(4, 4);
  h += Complex{a.a1, 0.0} * kron(pauli(1), pauli(1));
  h += Complex{a.a2, 0.0} * kron(pauli(2), pauli(2));
  h += Complex{a.a3, 0.0} * kron(pauli(3), pauli(3));
  return hermitian_exp_minus_i(h);
}

CanonicalAngles random_cell_angles(CounterRng& rng) {
  double a = rng.uniform() * kPi / 4.0;
  double b = rng.uniform() * kPi / 4.0;
  double c = rng.uniform() * kPi / 4.0;
  double hi = std::max({a, b, c});
  double lo = std::min({a, b, c});
  return {hi, a + b + c - hi - lo, lo};
}

}  // namespace

TEST_SUITE_BEGIN("canon2q");

TEST_CASE("zeta at the origin is (1,0,0,0)") {
  const auto z = zeta({0.0, 0.0, 0.0});
  CHECK(std::abs(z[0] - 1.0) < 1e-15);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(z[static_cast<std::size_t>(k)]) < 1e-15);
}

TEST_CASE("zeta at (pi/4,0,0) is (1/sqrt2, -i/sqrt2, 0, 0)") {
  const auto z = zeta({kPi / 4.0, 0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(z[0] - Complex{r, 0.0}) < 1e-15);
  CHECK(std::abs(z[1] - Complex{0.0, -r}) < 1e-15);
  CHECK(std::abs(z[2]) < 1e-15);
  CHECK(std::abs(z[3]) < 1e-15);
}

TEST_CASE("zeta moduli at (pi/4,pi/4,pi/4) are all one half") {
  const auto z = zeta({kPi / 4.0, kPi / 4.0, kPi / 4.0});
  for (const auto& c : z) CHECK(std::abs(std::abs(c) - 0.5) < 1e-15);
}

TEST_CASE("zeta squared moduli sum to one for random angle triples") {
  CounterRng rng(17);
  for (int it = 0; it < 1000; ++it) {
    const auto z = zeta({rng.uniform() * 2.0 * kPi, rng.uniform() * 2.0 * kPi,
                         rng.uniform() * 2.0 * kPi});
    double s = 0.0;
    for (const auto& c : z) s += std::norm(c);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("canonical-cell spectra are ordered with the stated saturations") {
  auto moduli = [](const CanonicalAngles& a) {
    const auto z = zeta(a);
    std::array<double, 4> m{};
    for (std::size_t k = 0; k < 4; ++k) m[k] = std::abs(z[k]);
    return m;
  };
  CounterRng rng(18);
  for (int it = 0; it < 200; ++it) {
    const auto m = moduli(random_cell_angles(rng));
    CHECK(m[0] >= m[1] - 1e-12);
    CHECK(m[1] >= m[2] - 1e-12);
    CHECK(m[2] >= m[3] - 1e-12);
  }
  // saturation boundaries
  const auto sat0 = moduli({kPi / 4.0, 0.3, 0.1});
  CHECK(std::abs(sat0[0] - sat0[1]) < 1e-12);
  const auto sat1 = moduli({0.5, 0.5, 0.2});
  CHECK(std::abs(sat1[1] - sat1[2]) < 1e-12);
  const auto sat2 = moduli({0.6, 0.3, 0.3});
  CHECK(std::abs(sat2[2] - sat2[3]) < 1e-12);
  const auto sat3 = moduli({0.5, 0.0, 0.0});
  CHECK(sat3[3] < 1e-15);
  // strict in the interior
  const auto strict = moduli({0.7, 0.5, 0.2});
  CHECK(strict[0] > strict[1] + 1e-6);
  CHECK(strict[1] > strict[2] + 1e-6);
  CHECK(strict[2] > strict[3] + 1e-6);
  CHECK(strict[3] > 1e-6);
}

TEST_CASE("build_canonical at the origin is the identity") {
  CHECK(max_entry_diff(build_canonical({0, 0, 0}), CMatrix::identity(4)) <
        1e-15);
}

TEST_CASE("SWAP equals (1+i)/sqrt2 times U(pi/4,pi/4,pi/4)") {
  CMatrix u = build_canonical({kPi / 4.0, kPi / 4.0, kPi / 4.0});
  u *= Complex{1.0, 1.0} / std::sqrt(2.0);
  CHECK(max_entry_diff(u, literal_swap()) < 1e-14);
}

TEST_CASE("CNOT decomposes through the published local frames") {
  const double r = 1.0 / std::sqrt(2.0);
  const CMatrix va = CMatrix::mat2(r, r, kI * r, -kI * r);
  const CMatrix wb = CMatrix::mat2(r, kI * r, -kI * r, -r);
  const CMatrix vta = CMatrix::mat2(r, r, r, -r);
  const CMatrix wtb = CMatrix::mat2(1, 0, 0, -1);
  const CMatrix rebuilt = kron(va, wb) *
                          build_canonical({kPi / 4.0, 0.0, 0.0}) *
                          kron(vta, wtb);
  CHECK(max_entry_diff(rebuilt, literal_cnot()) < 1e-14);
}

TEST_CASE("build_canonical agrees with the exponential route") {
  CounterRng rng(19);
  for (int it = 0; it < 25; ++it) {
    const CanonicalAngles a = random_cell_angles(rng);
    CHECK(max_entry_diff(build_canonical(a), canonical_by_exponential(a)) <
          1e-10);
    CHECK(build_canonical(a).is_unitary(1e-10));
  }
}

TEST_CASE("operator Schmidt spectrum of CNOT") {
  const SchmidtSpectrum4 s = operator_schmidt_spectrum(literal_cnot());
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(s.s[0] == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.s[1] == doctest::Approx(r).epsilon(1e-12));
  CHECK(s.s[2] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.s[3] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("operator Schmidt spectrum of SWAP is flat") {
  const SchmidtSpectrum4 s = operator_schmidt_spectrum(literal_swap());
  for (double v : s.s) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("the two published same-spectrum unitaries coincide as claimed") {
  const CanonicalAngles first{kPi / 4.0, std::acos(std::sqrt(11.0 / 16.0)),
                              std::acos(std::sqrt(17.0 / 24.0))};
  const CanonicalAngles second{kPi / 4.0, std::acos(std::sqrt(5.0 / 8.0)),
                               std::acos(std::sqrt(13.0 / 16.0))};
  const SchmidtSpectrum4 sa = operator_schmidt_spectrum(build_canonical(first));
  const SchmidtSpectrum4 sb =
      operator_schmidt_spectrum(build_canonical(second));
  const double hi = std::sqrt(37.0 / 128.0);
  const double lo = std::sqrt(27.0 / 128.0);
  for (const auto& s : {sa, sb}) {
    CHECK(std::abs(s.s[0] - hi) < 1e-10);
    CHECK(std::abs(s.s[1] - hi) < 1e-10);
    CHECK(std::abs(s.s[2] - lo) < 1e-10);
    CHECK(std::abs(s.s[3] - lo) < 1e-10);
  }
  CHECK(same_schmidt_class(build_canonical(first), build_canonical(second)));
}

TEST_CASE("schmidt_rank hits 1, 2 and 4 on the lemma's branches") {
  CHECK(schmidt_rank(CMatrix::identity(4)) == 1);
  CHECK(schmidt_rank(literal_cnot()) == 2);
  CHECK(schmidt_rank(build_canonical({kPi / 8.0, kPi / 16.0, 0.0})) == 4);
}

TEST_CASE("operator_schmidt_spectrum rejects non-unitary input") {
  CMatrix m(4, 4);
  m(0, 0) = 2.0;
  CHECK_THROWS_AS(operator_schmidt_spectrum(m), NotUnitary);
  CHECK_THROWS_AS(schmidt_rank(m), NotUnitary);
}

TEST_CASE("closed-form moduli match the reshuffle SVD spectrum") {
  CounterRng rng(20);
  for (int it = 0; it < 200; ++it) {
    const CanonicalAngles a = random_cell_angles(rng);
    const auto z = zeta(a);
    std::array<double, 4> expect{};
    for (std::size_t k = 0; k < 4; ++k) expect[k] = std::abs(z[k]);
    std::sort(expect.begin(), expect.end(), std::greater<double>());
    const SchmidtSpectrum4 s = operator_schmidt_spectrum(build_canonical(a));
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(s.s[k] - expect[k]) < 1e-9);
  }
}

TEST_CASE("the spectrum is invariant under local frames and conjugation") {
  CounterRng rng(21);
  for (int it = 0; it < 10; ++it) {
    const CanonicalAngles a = random_cell_angles(rng);
    const CMatrix u = build_canonical(a);
    const CMatrix dressed = kron(random_unitary(2, rng), random_unitary(2, rng)) *
                            u *
                            kron(random_unitary(2, rng), random_unitary(2, rng));
    CHECK(same_schmidt_class(u, dressed, 1e-9));
    CHECK(same_schmidt_class(u, u.conjugate(), 1e-9));
  }
}

TEST_CASE("recover_angles returns the origin for a product spectrum") {
  const AngleRecovery r = recover_angles({{1.0, 0.0, 0.0, 0.0}});
  CHECK(r.kind == AngleRecovery::Kind::Unique);
  CHECK(std::abs(r.angles.a1) < 1e-9);
  CHECK(std::abs(r.angles.a2) < 1e-9);
  CHECK(std::abs(r.angles.a3) < 1e-9);
}

TEST_CASE("recover_angles round-trips interior canonical angles") {
  const CanonicalAngles a{kPi / 8.0, kPi / 16.0, kPi / 32.0};
  const AngleRecovery r =
      recover_angles(operator_schmidt_spectrum(build_canonical(a)));
  REQUIRE(r.kind == AngleRecovery::Kind::Unique);
  CHECK(std::abs(r.angles.a1 - a.a1) < 1e-8);
  CHECK(std::abs(r.angles.a2 - a.a2) < 1e-8);
  CHECK(std::abs(r.angles.a3 - a.a3) < 1e-8);
}

TEST_CASE("recover_angles identity holds across the open cell") {
  CounterRng rng(22);
  int done = 0;
  while (done < 50) {
    const CanonicalAngles a = random_cell_angles(rng);
    if (a.a1 > kPi / 4.0 - 1e-3) continue;  // stay off the degenerate wall
    const SchmidtSpectrum4 s = operator_schmidt_spectrum(build_canonical(a));
    if (s.s[0] <= s.s[1] + 1e-6) continue;
    const AngleRecovery r = recover_angles(s);
    REQUIRE(r.kind == AngleRecovery::Kind::Unique);
    CHECK(std::abs(r.angles.a1 - a.a1) < 1e-7);
    CHECK(std::abs(r.angles.a2 - a.a2) < 1e-7);
    CHECK(std::abs(r.angles.a3 - a.a3) < 1e-7);
    ++done;
  }
}

TEST_CASE("the CNOT spectrum recovers to the a2=a3=0 family member") {
  const double r = 1.0 / std::sqrt(2.0);
  const AngleRecovery rec = recover_angles({{r, r, 0.0, 0.0}});
  REQUIRE(rec.kind == AngleRecovery::Kind::DegenerateFamily);
  CHECK(rec.family_product == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rec.angles.a1 == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(std::abs(rec.angles.a2) < 1e-7);
  CHECK(std::abs(rec.angles.a3) < 1e-12);
}

TEST_CASE("the published same-spectrum pair recovers family product 5/32") {
  const double hi = std::sqrt(37.0 / 128.0);
  const double lo = std::sqrt(27.0 / 128.0);
  const AngleRecovery rec = recover_angles({{hi, hi, lo, lo}});
  REQUIRE(rec.kind == AngleRecovery::Kind::DegenerateFamily);
  CHECK(rec.family_product == doctest::Approx(5.0 / 32.0).epsilon(1e-10));
}

TEST_CASE("recover_angles survives boundary-hugging inputs") {
  // representative corners: wall-adjacent with rank-deficient tails,
  // wall-adjacent with a resolvable third angle, and near-degenerate pairs
  const CanonicalAngles probes[] = {
      {kPi / 4.0 - 5e-9, 0.55, 0.31},
      {kPi / 4.0 - 5e-9, 1e-5, 1e-6},
      {kPi / 4.0 - 8.8e-7, 1.6e-8, 1.3e-8},
      {kPi / 4.0 - 4.8e-5, kPi / 4.0 - 8.2e-5, 1.14e-5},
      {kPi / 4.0 - 2e-12, 3e-12, 3e-12},
      {1e-10, 1e-11, 0.0},
  };
  for (const CanonicalAngles& a : probes) {
    const SchmidtSpectrum4 spec = operator_schmidt_spectrum(build_canonical(a));
    AngleRecovery rec;
    REQUIRE_NOTHROW(rec = recover_angles(spec));
    const auto z = zeta(rec.angles);
    std::array<double, 4> rb{};
    for (std::size_t k = 0; k < 4; ++k) rb[k] = std::abs(z[k]);
    std::sort(rb.begin(), rb.end(), std::greater<double>());
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(rb[k] - spec.s[k]) < 1e-7);
  }
}

TEST_CASE("recover_angles inverts spectra drawn against the cell boundaries") {
  CounterRng rng(0xB0B);
  auto draw = [&](double lo, double hi) {
    const int mode = static_cast<int>(rng.uniform() * 4.0);
    double x;
    if (mode == 0) {
      x = lo + std::pow(10.0, -12.0 + 10.0 * rng.uniform());
    } else if (mode == 1) {
      x = hi - std::pow(10.0, -12.0 + 10.0 * rng.uniform());
    } else {
      x = lo + rng.uniform() * (hi - lo);
    }
    return std::min(hi, std::max(lo, x));
  };
  for (int it = 0; it < 2000; ++it) {
    const double a1 = draw(0.0, kPi / 4.0);
    const double a2 = draw(0.0, a1);
    const double a3 = draw(0.0, a2);
    const SchmidtSpectrum4 spec =
        operator_schmidt_spectrum(build_canonical({a1, a2, a3}));
    AngleRecovery rec;
    REQUIRE_NOTHROW(rec = recover_angles(spec));
    const auto z = zeta(rec.angles);
    std::array<double, 4> rb{};
    for (std::size_t k = 0; k < 4; ++k) rb[k] = std::abs(z[k]);
    std::sort(rb.begin(), rb.end(), std::greater<double>());
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(std::abs(rb[k] - spec.s[k]) < 1e-7);
  }
}

TEST_CASE("recover_angles rejects spectra outside the accessible region") {
  // ordered and normalized, but the product system turns negative
  const double s3 = std::sqrt(1.0 - 0.59 * 0.59 - 2.0 * 0.55 * 0.55);
  CHECK_THROWS_AS(recover_angles({{0.59, 0.55, 0.55, s3}}), InfeasibleSpectrum);
}

TEST_CASE("CNOT and CZ share a Schmidt class, CNOT and SWAP do not") {
  CHECK(same_schmidt_class(literal_cnot(), literal_cz()));
  CHECK(!same_schmidt_class(literal_cnot(), literal_swap()));
}

TEST_CASE("magic and Bell bases are orthonormal and related unitarily") {
  const auto magic = magic_basis();
  const auto bell = bell_basis();
  // first magic vector is (|00> + |11>)/sqrt2
  CHECK(std::abs(magic[0][0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(magic[0][3] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(magic[0][1]) + std::abs(magic[0][2]) < 1e-15);

  CMatrix gm(4, 4), gb(4, 4), change(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      gm(i, j) = inner(magic[i], magic[j]);
      gb(i, j) = inner(bell[i], bell[j]);
      change(i, j) = inner(bell[i], magic[j]);
    }
  CHECK(max_entry_diff(gm, CMatrix::identity(4)) < 1e-14);
  CHECK(max_entry_diff(gb, CMatrix::identity(4)) < 1e-14);
  CHECK(change.is_unitary(1e-12));
}

TEST_SUITE_END();
