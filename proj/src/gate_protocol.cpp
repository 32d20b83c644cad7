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

#include "qvk/gate_protocol.hpp"

#include <algorithm>
#include <cmath>

#include "qvk/identification_sets.hpp"

namespace qvk {

namespace {

constexpr double kProductTol = 1e-10;
constexpr double kMatchTol = 1e-8;
constexpr int kSearchBudget = 100;

CVector qubit(Complex a, Complex b) {
  CVector v(2);
  v[0] = a;
  v[1] = b;
  return v;
}

// factors for the connecting-state scan
std::vector<CVector> connecting_factors() {
  const double r = 1.0 / std::sqrt(2.0);
  return {qubit(1, 0), qubit(0, 1), qubit(r, r), qubit(r, Complex{0.0, r})};
}

bool matches_up_to_phase(const CMatrix& a, const CMatrix& b, double tol) {
  // find the largest entry of b and align phases there
  std::size_t bi = 0, bj = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (std::abs(b(i, j)) > best) {
        best = std::abs(b(i, j));
        bi = i;
        bj = j;
      }
  if (best < tol) return a.max_abs() < tol;
  const Complex ratio = a(bi, bj) / b(bi, bj);
  if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
  CMatrix scaled = b;
  scaled *= ratio;
  return (a - scaled).max_abs() < tol;
}

}  // namespace

int mu(const CMatrix& u) {
  return classify_by_spectrum(u) == RegionKind::SE ? 5 : 4;
}

std::pair<int, int> mu_bounds_general(int dim_a, int dim_b) {
  if (dim_a < 2 || dim_b < 2)
    throw Error("bipartite bounds need local dimensions of at least two");
  const int d = dim_a * dim_b;
  return {d, 2 * d};
}

int mu_from_dprod(int d, int d_prod, bool prod_connected) {
  if (d_prod < 0 || d_prod > d) throw Error("d_prod must lie in [0, d]");
  if (d_prod < d) return 2 * d - d_prod;
  return prod_connected ? d : d + 1;
}

void GateProtocol::validate() const {
  if (tests.empty()) throw ValidationFailed("protocol has no tests");
  double psum = 0.0;
  int settings = 0;
  StateSet inputs;
  for (const auto& t : tests) {
    if (t.probability <= 0.0)
      throw ValidationFailed("test probability must be positive");
    psum += t.probability;
    t.strategy.validate();
    const CVector expect = target.apply(t.input);
    if ((t.strategy.target.vector - expect).norm() > 1e-10)
      throw ValidationFailed("strategy target is not the image of the input");
    if (t.strategy.nu <= 0.0)
      throw ValidationFailed("ordinary protocols need positive gaps");
    if (t.setting_count != static_cast<int>(t.strategy.tests.size()))
      throw ValidationFailed("per-test setting count is wrong");
    settings += t.setting_count;
    inputs.states.push_back(t.input);
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw ValidationFailed("test probabilities must sum to one");
  if (settings != setting_count)
    throw ValidationFailed("setting count does not match the tests");
  const SpanCheck span = is_connected_spanning(inputs);
  if (!span.is_identification_set())
    throw ValidationFailed("test states do not identify the target");
}

GateProtocol assemble_protocol(const CMatrix& target,
                               const std::vector<CVector>& test_states,
                               RegionKind classification) {
  GateProtocol protocol;
  protocol.target = target;
  protocol.classification = classification;
  protocol.ordinary = true;
  const double p = 1.0 / static_cast<double>(test_states.size());
  for (const CVector& input : test_states) {
    GateTest test;
    test.probability = p;
    test.input = input;
    const CVector output = target.apply(input);
    if (concurrence(output) < kProductTol) {
      const ProductFactors f = product_factors(input, target);
      test.strategy = single_projector_strategy(f.output_a, f.output_b);
    } else {
      test.strategy = two_setting_protocol(BipartiteState(output, 2, 2));
    }
    for (auto& wt : test.strategy.tests)
      wt.op.input_state = BipartiteState(input, 2, 2);
    test.setting_count = static_cast<int>(test.strategy.tests.size());
    protocol.setting_count += test.setting_count;
    protocol.tests.push_back(std::move(test));
  }
  protocol.validate();
  return protocol;
}

GateProtocol build_protocol(const GateSpec& gate) {
  const Efmis set = gate_efmis(gate);
  std::vector<CVector> states(set.states.begin(), set.states.end());
  return assemble_protocol(set.target, states, RegionKind::SEF);
}

GateProtocol build_protocol(const CanonicalAngles& angles) {
  if (!angles.in_canonical_cell())
    throw SynthesisFailed(
        "angles leave the canonical cell; reduce them before synthesis");
  const RegionTag region = classify_region(angles.a1, angles.a2, angles.a3);
  const CMatrix target = build_canonical(angles);

  if (region.tag == RegionKind::SEF) {
    const Efmis set = synthesize(angles);
    std::vector<CVector> states(set.states.begin(), set.states.end());
    return assemble_protocol(target, states, RegionKind::SEF);
  }

  // five-setting class: three independent members of the constraint
  // family plus a connecting product state with an entangled image
  const Complex i{0.0, 1.0};
  const std::vector<std::array<std::pair<Complex, Complex>, 3>> seed_triples = {
      {{{1, 0}, {0, 1}, {1, 1}}},
      {{{1, i}, {1, -1}, {2, 1}}},
      {{{i, 1}, {2, i}, {1, 2}}},
      {{{1.0 + i, 1}, {1, 1.0 + i}, {1.0 - i, 2}}},
  };

  int budget = kSearchBudget;
  for (const auto& triple : seed_triples) {
    if (budget <= 0) break;
    std::vector<CVector> family;
    bool seeds_ok = true;
    for (const auto& [g1, g2] : triple) {
      --budget;
      try {
        family.push_back(
            magic_to_computational(solve_constraint_magic(angles, g1, g2).gamma));
      } catch (const Error&) {
        seeds_ok = false;
        break;
      }
    }
    if (!seeds_ok) continue;
    CMatrix fam(4, 3);
    for (std::size_t j = 0; j < 3; ++j) fam.set_column(j, family[j]);
    if (numerical_rank(fam, 1e-7) != 3) continue;

    // orthonormalize the family span once for the residual test
    CMatrix ortho(4, 3);
    std::size_t cols = 0;
    for (const auto& f : family) {
      CVector v = f;
      for (std::size_t c = 0; c < cols; ++c) {
        const CVector col = ortho.column(c);
        v -= inner(col, v) * col;
      }
      ortho.set_column(cols++, v.normalized());
    }

    for (const CVector& fa : connecting_factors()) {
      for (const CVector& fb : connecting_factors()) {
        if (budget-- <= 0) break;
        const CVector cand = kron(fa, fb);
        CVector resid = cand;
        for (std::size_t c = 0; c < 3; ++c) {
          const CVector col = ortho.column(c);
          resid -= inner(col, resid) * col;
        }
        if (resid.norm() <= 1e-6) continue;
        bool touches_all = true;
        for (const auto& f : family)
          touches_all = touches_all && std::abs(inner(f, cand)) > 1e-6;
        if (!touches_all) continue;

        std::vector<CVector> states = family;
        states.push_back(cand);
        return assemble_protocol(target, states, RegionKind::SE);
      }
    }
  }
  throw SynthesisFailed("connecting-state search exhausted its budget");
}

GateProtocol build_protocol(const CMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4 || !u.is_unitary(1e-9))
    throw NotUnitary("protocol synthesis expects a 4x4 unitary");

  // library gates first
  for (const GateKind kind : {GateKind::Cnot, GateKind::Cz, GateKind::Swap}) {
    if ((u - gate_matrix({kind})).max_abs() < kMatchTol)
      return build_protocol(GateSpec{kind});
  }
  {
    // C-Phase detection: diagonal, first three entries one
    bool diag = true;
    for (std::size_t r = 0; r < 4 && diag; ++r)
      for (std::size_t c = 0; c < 4 && diag; ++c)
        if (r != c && std::abs(u(r, c)) > kMatchTol) diag = false;
    if (diag && std::abs(u(0, 0) - 1.0) < kMatchTol &&
        std::abs(u(1, 1) - 1.0) < kMatchTol &&
        std::abs(u(2, 2) - 1.0) < kMatchTol &&
        std::abs(u(3, 3) - 1.0) > kMatchTol) {
      double phi = std::arg(u(3, 3));
      if (phi < 0.0) phi += 2.0 * kPi;
      return build_protocol(GateSpec{GateKind::CPhase, phi});
    }
  }

  const AngleRecovery rec = recover_angles(operator_schmidt_spectrum(u));
  const CMatrix canonical = build_canonical(rec.angles);
  const bool direct = matches_up_to_phase(u, canonical, kMatchTol);
  const bool conjugated =
      !direct && matches_up_to_phase(u, canonical.conjugate(), kMatchTol);
  if (!direct && !conjugated)
    throw SynthesisFailed(
        "target is not a canonical-form unitary up to phase/conjugation; "
        "local-frame extraction is unsupported");

  const RegionTag region =
      classify_region(rec.angles.a1, rec.angles.a2, rec.angles.a3);
  const GateProtocol canonical_protocol = build_protocol(rec.angles);
  std::vector<CVector> states;
  states.reserve(canonical_protocol.tests.size());
  for (const auto& t : canonical_protocol.tests)
    states.push_back(conjugated ? t.input.conjugate() : t.input);
  return assemble_protocol(u, states, region.tag);
}

QuantumChannel QuantumChannel::from_choi(CMatrix choi) {
  const std::size_t d2 = choi.rows();
  const auto d = static_cast<std::size_t>(std::lround(std::sqrt(
      static_cast<double>(d2))));
  if (choi.cols() != d2 || d * d != d2)
    throw NotCPTP("Choi matrix must be square with a square dimension");
  if (!choi.is_hermitian(1e-8)) throw NotCPTP("Choi matrix is not Hermitian");
  const EigResult eig = hermitian_eig(choi);
  if (eig.values.back() < -1e-8)
    throw NotCPTP("Choi matrix is not positive semidefinite");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Complex tr = 0.0;
      for (std::size_t k = 0; k < d; ++k) tr += choi(i * d + k, j * d + k);
      const Complex expect = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(tr - expect) > 1e-8)
        throw NotCPTP("channel is not trace preserving");
    }
  return QuantumChannel(std::move(choi), d);
}

QuantumChannel QuantumChannel::from_unitary(const CMatrix& u) {
  if (u.rows() != u.cols() || !u.is_unitary(1e-9))
    throw NotUnitary("channel conjugation expects a unitary");
  const std::size_t d = u.rows();
  CMatrix choi(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          choi(i * d + k, j * d + l) = u(k, i) * std::conj(u(l, j));
  return from_choi(std::move(choi));
}

QuantumChannel QuantumChannel::depolarizing(const CMatrix& u, double p) {
  if (p < 0.0 || p > 1.0) throw Error("depolarizing weight must be in [0,1]");
  const QuantumChannel base = from_unitary(u);
  const std::size_t d = base.dim();
  CMatrix choi = base.choi();
  choi *= Complex{1.0 - p, 0.0};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      choi(i * d + k, i * d + k) += p / static_cast<double>(d);
  return from_choi(std::move(choi));
}

CMatrix QuantumChannel::apply(const CMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_)
    throw DimensionMismatch("channel input dimension mismatch");
  CMatrix out(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Complex rij = rho(i, j);
      if (rij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
          out(k, l) += rij * choi_(i * dim_ + k, j * dim_ + l);
    }
  return out;
}

double pass_probability(const GateProtocol& protocol,
                        const QuantumChannel& channel) {
  if (channel.dim() != protocol.target.rows())
    throw DimensionMismatch("channel and protocol dimensions disagree");
  double total = 0.0;
  for (const auto& t : protocol.tests) {
    const CMatrix rho = outer(t.input, t.input);
    const CMatrix mapped = channel.apply(rho);
    total += t.probability * (t.strategy.omega * mapped).trace().real();
  }
  return total;
}

}  // namespace qvk
