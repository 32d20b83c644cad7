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

#include "qvk/efmis.hpp"

#include <cmath>
#include <tuple>
#include <utility>

#include "qvk/identification_sets.hpp"
#include "qvk/product_geometry.hpp"

namespace qvk {

namespace {

constexpr double kProductTol = 1e-10;  // concurrence acceptance

CVector qubit(Complex a, Complex b) {
  CVector v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

CVector k0() { return qubit(1, 0); }
CVector k1() { return qubit(0, 1); }
CVector kplus() {
  const double r = 1.0 / std::sqrt(2.0);
  return qubit(r, r);
}
CVector kminus() {
  const double r = 1.0 / std::sqrt(2.0);
  return qubit(r, -r);
}

// {|0+>, |1+>, |-0>, |+0>}: the shared literal set of the pi/4-wall and
// identity cases
std::array<CVector, 4> wall_case_states() {
  return {kron(k0(), kplus()), kron(k1(), kplus()), kron(kminus(), k0()),
          kron(kplus(), k0())};
}

CMatrix gram_matrix(const std::array<CVector, 4>& states) {
  CMatrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = inner(states[i], states[j]);
  return g;
}

}  // namespace

Efmis assemble_efmis(std::array<CVector, 4> states, CMatrix target,
                     EfmisCase tag) {
  Efmis out;
  out.states = std::move(states);
  out.target = std::move(target);
  out.case_tag = tag;
  out.report = validate(out.states, out.target);
  if (!out.report.pass)
    throw ValidationFailed("candidate set fails the EFMIS invariants");
  out.gram = out.report.gram;
  for (std::size_t j = 0; j < 4; ++j)
    out.factors[j] = product_factors(out.states[j], out.target);
  return out;
}

Case3Coeffs case3_coeffs(const CanonicalAngles& a) {
  if (!a.in_canonical_cell())
    throw CasePreconditionViolated("angles leave the canonical cell");
  if (!(a.a1 > a.a3) || !(a.a2 < kPi / 4.0))
    throw CasePreconditionViolated(
        "construction needs a1 > a3 and a2 < pi/4");

  const double s12 = std::sin(2.0 * (a.a1 + a.a2));
  const double denom =
      2.0 * s12 +
      2.0 * (std::sin(2.0 * a.a1) + std::sin(2.0 * a.a2)) * std::cos(2.0 * a.a3);
  Case3Coeffs out;
  out.gamma0_sq = Complex{s12 / denom, 0.0};

  auto phase = [](double t) { return std::exp(Complex{0.0, t}); };
  const Complex x1 = phase(2.0 * a.a1) * out.gamma0_sq;
  const Complex x2 = phase(2.0 * a.a2) * out.gamma0_sq;
  const Complex x3 =
      phase(2.0 * a.a1 + 2.0 * a.a2 - 2.0 * a.a3 + kPi) *
      ((std::sin(2.0 * a.a1 + 2.0 * a.a3) + std::sin(2.0 * a.a2 + 2.0 * a.a3)) /
       s12) *
      out.gamma0_sq;
  const Complex x4 =
      phase(-2.0 * a.a3 + kPi) *
      ((std::sin(2.0 * a.a1 - 2.0 * a.a3) + std::sin(2.0 * a.a2 - 2.0 * a.a3)) /
       s12) *
      out.gamma0_sq;
  out.gamma = {principal_sqrt(x1), principal_sqrt(x2), principal_sqrt(x3),
               principal_sqrt(x4)};
  return out;
}

Efmis synthesize(const CanonicalAngles& angles) {
  if (!angles.in_canonical_cell())
    throw CasePreconditionViolated("angles leave the canonical cell");
  if (classify_region(angles.a1, angles.a2, angles.a3).tag == RegionKind::SE)
    throw InSE("equal interior angles admit no entanglement-free set");

  const CMatrix target = build_canonical(angles);
  const bool wall = std::abs(angles.a1 - kPi / 4.0) < kEqTol &&
                    std::abs(angles.a2 - kPi / 4.0) < kEqTol;
  const bool origin = angles.a1 < kEqTol;

  if (wall || origin)
    return assemble_efmis(wall_case_states(), target,
                    wall ? EfmisCase::Case1 : EfmisCase::Case2);

  const Case3Coeffs c = case3_coeffs(angles);
  const auto& g = c.gamma;
  const std::array<std::array<Complex, 4>, 4> patterns = {{
      {g[0], g[1], g[2], g[3]},
      {g[0], -g[1], g[2], g[3]},
      {g[0], g[1], g[2], -g[3]},
      {-g[0], g[1], g[2], -g[3]},
  }};
  std::array<CVector, 4> states;
  for (std::size_t j = 0; j < 4; ++j)
    states[j] = magic_to_computational(patterns[j]);
  Efmis out = assemble_efmis(std::move(states), target, EfmisCase::Case3);

  // Gram determinant identity specific to the sign-pattern construction
  double prod = 1.0;
  for (const auto& gk : g) prod *= std::norm(gk);
  if (std::abs(out.gram.determinant() - 64.0 * prod) > 1e-9)
    throw ValidationFailed("Gram determinant misses the closed form");
  return out;
}

CMatrix gate_matrix(const GateSpec& gate) {
  switch (gate.kind) {
    case GateKind::Cnot: {
      CMatrix m(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      return m;
    }
    case GateKind::Cz: {
      CMatrix m = CMatrix::identity(4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::CPhase: {
      if (gate.phi <= 0.0 || gate.phi >= 2.0 * kPi)
        throw Error("C-Phase needs a nontrivial phase in (0, 2pi)");
      CMatrix m = CMatrix::identity(4);
      m(3, 3) = std::exp(Complex{0.0, gate.phi});
      return m;
    }
    case GateKind::Swap: {
      CMatrix m(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
  }
  throw Error("unknown gate kind");
}

Efmis gate_efmis(const GateSpec& gate) {
  std::array<CVector, 4> states;
  switch (gate.kind) {
    case GateKind::Cnot:
      states = {kron(kplus(), kminus()), kron(kminus(), kminus()),
                kron(k1(), k0()), kron(k0(), k0())};
      break;
    case GateKind::Cz:
      states = {kron(kplus(), k1()), kron(kminus(), k1()),
                kron(k1(), kplus()), kron(k0(), kplus())};
      break;
    case GateKind::CPhase: {
      CVector third = kron(k1(), kplus());
      third *= Complex{-1.0, 0.0};
      states = {kron(kminus(), k0()), kron(kplus(), k0()), third,
                kron(k0(), kplus())};
      break;
    }
    case GateKind::Swap:
      states = wall_case_states();
      break;
  }
  return assemble_efmis(std::move(states), gate_matrix(gate), EfmisCase::GateLibrary);
}

Efmis conjugate_set(const Efmis& set, const LocalUnitaryFrame& frame,
                    ConjugateDirection direction) {
  frame.check();
  std::array<CVector, 4> states = set.states;
  CMatrix target = set.target;
  if (direction == ConjugateDirection::Pre) {
    const CMatrix local = kron(frame.v_tilde_a, frame.w_tilde_b);
    const CMatrix inverse = local.adjoint();
    for (auto& s : states) s = inverse.apply(s);
    target = target * local;
  } else {
    target = kron(frame.v_a, frame.w_b) * target;
  }
  return assemble_efmis(std::move(states), std::move(target), set.case_tag);
}

ValidationReport validate(const std::array<CVector, 4>& states,
                          const CMatrix& target) {
  if (target.rows() != 4 || target.cols() != 4 || !target.is_unitary(1e-9))
    throw NotUnitary("EFMIS validation expects a 4x4 unitary target");
  ValidationReport rep;
  StateSet set;
  for (std::size_t j = 0; j < 4; ++j) {
    rep.input_concurrence[j] = concurrence(states[j]);
    rep.output_concurrence[j] = concurrence(target.apply(states[j]));
    set.states.push_back(states[j]);
  }
  rep.gram = gram_matrix(states);
  rep.rank = numerical_rank(stacked(set));
  rep.connected = transition_graph(set).connected();
  rep.pass = rep.rank == 4 && rep.connected;
  for (std::size_t j = 0; j < 4; ++j)
    rep.pass = rep.pass && rep.input_concurrence[j] < kProductTol &&
               rep.output_concurrence[j] < kProductTol;
  return rep;
}

ProductFactors product_factors(const CVector& state, const CMatrix& target) {
  auto split = [](const CVector& psi) {
    CMatrix m(2, 2);
    m(0, 0) = psi[0];
    m(0, 1) = psi[1];
    m(1, 0) = psi[2];
    m(1, 1) = psi[3];
    const SvdResult s = svd(m);
    if (s.values.size() > 1 && s.values[1] > 1e-6)
      throw ValidationFailed("state is not product; no exact factors exist");
    CVector a = s.u.column(0);
    CVector b = s.v.column(0).conjugate();
    b *= Complex{s.values[0], 0.0};
    // deterministic phase: largest component of a is positive real
    std::size_t jmax = std::abs(a[0]) >= std::abs(a[1]) ? 0 : 1;
    const Complex ph = a[jmax] / std::abs(a[jmax]);
    a *= std::conj(ph);
    b *= ph;
    return std::pair<CVector, CVector>{a, b};
  };
  ProductFactors out;
  std::tie(out.input_a, out.input_b) = split(state);
  std::tie(out.output_a, out.output_b) = split(target.apply(state));
  return out;
}

LocalUnitaryFrame cnot_frame() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  LocalUnitaryFrame f;
  f.v_a = CMatrix::mat2(r, r, i * r, -i * r);
  f.w_b = CMatrix::mat2(r, i * r, -i * r, -r);
  f.v_tilde_a = CMatrix::mat2(r, r, r, -r);
  f.w_tilde_b = CMatrix::mat2(1, 0, 0, -1);
  f.check();
  return f;
}

LocalUnitaryFrame cphase_conjugate_frame(double phi) {
  const double r = 1.0 / std::sqrt(2.0);
  auto phase = [](double t) { return std::exp(Complex{0.0, t}); };
  LocalUnitaryFrame f;
  f.v_a = CMatrix::mat2(r, r, -r * phase(-phi / 2.0), r * phase(-phi / 2.0));
  f.w_b = CMatrix::mat2(r * phase(phi / 4.0), r * phase(phi / 4.0),
                        r * phase(-phi / 4.0), -r * phase(-phi / 4.0));
  f.v_tilde_a = CMatrix::mat2(r, -r, r, r);
  f.w_tilde_b = CMatrix::mat2(r, r, r, -r);
  f.check();
  return f;
}

}  // namespace qvk
