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

#include "qvk/product_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qvk/rng.hpp"

namespace qvk {

namespace {

constexpr double kRangeTol = 1e-9;       // a1 + a2 boundary margin
constexpr double kMembershipTol = 1e-8;  // cOut acceptance
constexpr double kDprodRankTol = 1e-7;   // relative rank threshold

struct RCoeffs {
  Complex r31, r32, r41, r42;
};

RCoeffs constraint_coeffs(const CanonicalAngles& a) {
  const double s12 = std::sin(2.0 * (a.a1 + a.a2));
  auto phase = [](double t) { return std::exp(Complex{0.0, t}); };
  RCoeffs r;
  r.r31 = phase(2.0 * a.a2 - 2.0 * a.a3 + kPi) *
          (std::sin(2.0 * a.a1 + 2.0 * a.a3) / s12);
  r.r32 = phase(2.0 * a.a1 - 2.0 * a.a3 + kPi) *
          (std::sin(2.0 * a.a2 + 2.0 * a.a3) / s12);
  r.r41 = phase(-2.0 * a.a1 - 2.0 * a.a3 + kPi) *
          (std::sin(2.0 * a.a2 - 2.0 * a.a3) / s12);
  r.r42 = phase(-2.0 * a.a2 - 2.0 * a.a3 + kPi) *
          (std::sin(2.0 * a.a1 - 2.0 * a.a3) / s12);
  return r;
}

}  // namespace

double concurrence(const CVector& state4) {
  if (state4.dim() != 4)
    throw DimensionMismatch("concurrence expects a two-qubit state");
  return 2.0 * std::abs(state4[0] * state4[3] - state4[1] * state4[2]);
}

ConstraintResidual constraint_residual(const CanonicalAngles& angles,
                                       const CVector& input) {
  const CMatrix u = build_canonical(angles);
  return {concurrence(input), concurrence(u.apply(input))};
}

Complex principal_sqrt(Complex z) {
  Complex r = std::sqrt(z);
  if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
  return r;
}

MagicCoeffs solve_constraint_magic(const CanonicalAngles& angles, Complex g1,
                                   Complex g2) {
  const double sum = angles.a1 + angles.a2;
  if (sum < kRangeTol || sum > kPi / 2.0 - kRangeTol)
    throw RangeUnsupported(
        "magic-basis constraint solution needs 0 < a1 + a2 < pi/2");
  const RCoeffs r = constraint_coeffs(angles);
  const Complex x1 = g1 * g1;
  const Complex x2 = g2 * g2;
  MagicCoeffs out;
  out.gamma = {g1, g2, principal_sqrt(r.r31 * x1 + r.r32 * x2),
               principal_sqrt(r.r41 * x1 + r.r42 * x2)};
  double norm = 0.0;
  for (const auto& g : out.gamma) norm += std::norm(g);
  norm = std::sqrt(norm);
  if (norm < kZeroTol)
    throw DegenerateSeed("constraint seed produced the zero vector");
  for (auto& g : out.gamma) g /= norm;
  return out;
}

CVector magic_to_computational(const std::array<Complex, 4>& gamma) {
  const auto basis = magic_basis();
  CVector out(4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i) out[i] += gamma[k] * basis[k][i];
  return out;
}

std::array<Complex, 4> computational_to_magic(const CVector& state) {
  if (state.dim() != 4)
    throw DimensionMismatch("magic expansion expects a two-qubit state");
  const auto basis = magic_basis();
  std::array<Complex, 4> out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = inner(basis[k], state);
  return out;
}

CanonicalAngles reduce_angles(double a1, double a2, double a3) {
  auto fold = [](double x) {
    x = std::fmod(x, kPi / 2.0);
    if (x < 0.0) x += kPi / 2.0;
    if (x > kPi / 4.0) x = kPi / 2.0 - x;
    return x;
  };
  std::array<double, 3> v{fold(a1), fold(a2), fold(a3)};
  std::sort(v.begin(), v.end(), std::greater<double>());
  return {v[0], v[1], v[2]};
}

RegionTag classify_region(double a1, double a2, double a3) {
  RegionTag out;
  out.reduced = reduce_angles(a1, a2, a3);
  const auto& r = out.reduced;
  const bool equal =
      std::abs(r.a1 - r.a2) < kEqTol && std::abs(r.a2 - r.a3) < kEqTol;
  const bool interior = r.a3 > kEqTol && r.a1 < kPi / 4.0 - kEqTol;
  out.tag = (equal && interior) ? RegionKind::SE : RegionKind::SEF;
  return out;
}

RegionKind classify_by_spectrum(const CMatrix& u) {
  const SchmidtSpectrum4 spec = operator_schmidt_spectrum(u);
  const auto& s = spec.s;
  const bool tail_equal =
      std::abs(s[1] - s[2]) < kEqTol && std::abs(s[2] - s[3]) < kEqTol;
  if (s[0] > s[1] + kEqTol && tail_equal && s[3] > kEqTol)
    return RegionKind::SE;
  return RegionKind::SEF;
}

int d_prod_estimate(const CMatrix& u, int samples, std::uint64_t seed) {
  if (samples < 50) throw Error("d_prod_estimate needs at least 50 samples");
  const SchmidtSpectrum4 spec = operator_schmidt_spectrum(u);

  bool have_angles = true;
  CanonicalAngles angles;
  try {
    angles = recover_angles(spec).angles;
  } catch (const InfeasibleSpectrum&) {
    have_angles = false;
  }
  if (have_angles && classify_by_spectrum(u) == RegionKind::SE) {
    // the equal-coefficient class is measure zero; recovery noise must
    // not push the representative off it, or the sampled family gains a
    // spurious dimension
    const double mean = (angles.a1 + angles.a2 + angles.a3) / 3.0;
    angles = {mean, mean, mean};
  }

  CounterRng rng(seed, 0xd9);
  std::vector<CVector> members;
  members.reserve(static_cast<std::size_t>(samples));

  const double sum = have_angles ? angles.a1 + angles.a2 : 0.0;
  const bool constraint_mode =
      have_angles && sum > kRangeTol && sum < kPi / 2.0 - kRangeTol;

  if (constraint_mode) {
    const Complex i{0.0, 1.0};
    const std::vector<std::pair<Complex, Complex>> fixed_seeds = {
        {1, 0},     {0, 1},     {1, 1},         {1, -1},
        {1, i},     {i, 1},     {1, -i},        {2, 1},
        {1, 2},     {1.0 + i, 1}, {1, 1.0 + i}, {3, 1.0 - i}};
    std::size_t next_fixed = 0;
    int budget = 4 * samples;
    while (static_cast<int>(members.size()) < samples && budget-- > 0) {
      Complex g1, g2;
      if (next_fixed < fixed_seeds.size()) {
        g1 = fixed_seeds[next_fixed].first;
        g2 = fixed_seeds[next_fixed].second;
        ++next_fixed;
      } else {
        g1 = rng.complex_normal();
        g2 = rng.complex_normal();
      }
      MagicCoeffs gamma;
      try {
        gamma = solve_constraint_magic(angles, g1, g2);
      } catch (const DegenerateSeed&) {
        continue;
      }
      const CVector state = magic_to_computational(gamma.gamma);
      const ConstraintResidual res = constraint_residual(angles, state);
      if (res.c_in < kMembershipTol && res.c_out < kMembershipTol)
        members.push_back(state);
    }
  } else {
    // boundary or unrecognized target: structured candidates interleaved
    // with Haar product states, filtered by the membership test
    const CMatrix ref = have_angles ? build_canonical(angles) : u;
    auto qubit = [](Complex a, Complex b) {
      CVector v(2);
      v[0] = a;
      v[1] = b;
      return v;
    };
    const double rt = 1.0 / std::sqrt(2.0);
    const std::vector<CVector> anchors = {
        CVector::basis(2, 0),       CVector::basis(2, 1),
        qubit(rt, rt),              qubit(rt, -rt),
        qubit(rt, Complex{0, rt}),  qubit(rt, Complex{0, -rt})};
    int budget = 4 * samples;
    std::size_t turn = 0;
    const std::size_t na = anchors.size();
    while (static_cast<int>(members.size()) < samples && budget-- > 0) {
      CVector cand;
      const std::size_t pattern = turn++ % (2 * na + 1);
      if (pattern < na) {
        cand = kron(anchors[pattern], random_state(2, rng));
      } else if (pattern < 2 * na) {
        cand = kron(random_state(2, rng), anchors[pattern - na]);
      } else {
        cand = kron(random_state(2, rng), random_state(2, rng));
      }
      if (concurrence(ref.apply(cand)) < kMembershipTol)
        members.push_back(cand);
    }
  }

  if (members.size() < 4)
    throw InsufficientSamples(
        "too few product-preserving states found to bound the span");

  CMatrix stackmat(4, members.size());
  for (std::size_t j = 0; j < members.size(); ++j)
    stackmat.set_column(j, members[j]);
  return numerical_rank(stackmat, kDprodRankTol);
}

RegionSample region_sample(const CanonicalAngles& angles) {
  const auto z = zeta(angles);
  const double z0sq = std::norm(z[0]);
  if (1.0 - std::abs(z[0]) < kZeroTol)
    throw ProductUnitary("barycentric coordinates are undefined at rank one");
  RegionSample out;
  out.zeta0_sq = z0sq;
  for (std::size_t j = 0; j < 3; ++j)
    out.xi[j] = std::norm(z[j + 1]) / (1.0 - z0sq);
  return out;
}

}  // namespace qvk
