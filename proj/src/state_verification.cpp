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

#include "qvk/state_verification.hpp"

#include <algorithm>
#include <cmath>

namespace qvk {

namespace {

constexpr double kRankTol = 1e-10;  // Schmidt-coefficient cutoff

// Reshape a bipartite vector into the dA x dB coefficient matrix.
CMatrix reshape(const BipartiteState& state) {
  CMatrix m(state.dim_a, state.dim_b);
  for (std::size_t a = 0; a < state.dim_a; ++a)
    for (std::size_t b = 0; b < state.dim_b; ++b)
      m(a, b) = state.vector[a * state.dim_b + b];
  return m;
}

// Extends k orthonormal columns to a full square orthonormal basis.
CMatrix complete_basis(const CMatrix& cols, std::size_t k) {
  const std::size_t n = cols.rows();
  CMatrix out(n, n);
  for (std::size_t j = 0; j < k; ++j) out.set_column(j, cols.column(j));
  std::size_t next = k;
  for (std::size_t e = 0; e < n && next < n; ++e) {
    CVector cand = CVector::basis(n, e);
    for (std::size_t c = 0; c < next; ++c) {
      const CVector col = out.column(c);
      cand -= inner(col, cand) * col;
    }
    if (cand.norm() > 1e-6) out.set_column(next++, cand.normalized());
  }
  if (next < n) throw NoConvergence("basis completion failed");
  return out;
}

CMatrix projectors_to_identity_defect(const std::vector<CMatrix>& ps) {
  CMatrix sum = CMatrix::zero(ps.front().rows(), ps.front().cols());
  for (const auto& p : ps) sum += p;
  return sum - CMatrix::identity(ps.front().rows());
}

}  // namespace

BipartiteState::BipartiteState(CVector v, std::size_t da, std::size_t db)
    : vector(std::move(v)), dim_a(da), dim_b(db) {
  if (dim_a == 0 || dim_b == 0 || vector.dim() != dim_a * dim_b)
    throw DimensionMismatch("bipartite dims do not match the vector length");
  if (std::abs(vector.norm() - 1.0) > 1e-12)
    throw ValidationFailed("bipartite state must be unit norm");
}

SchmidtData schmidt_decompose(const BipartiteState& state) {
  const CMatrix m = reshape(state);
  const SvdResult s = svd(m);
  const std::size_t k = std::min(state.dim_a, state.dim_b);

  SchmidtData out;
  out.coeffs = s.values;
  out.rank = 0;
  for (double c : out.coeffs)
    if (c > kRankTol) ++out.rank;
  out.left_basis = complete_basis(s.u, k);
  // psi = sum_i s_i u_i (x) conj(v_i), so B's Schmidt vectors are conj(v_i)
  out.right_basis = complete_basis(s.v.conjugate(), k);
  return out;
}

CMatrix MeasurementSetting::test_matrix() const {
  if (party_a.empty() || party_b.empty())
    throw ValidationFailed("each party needs at least one projector");
  const std::size_t da = party_a.front().rows();
  const std::size_t db = party_b.front().rows();
  CMatrix e = CMatrix::zero(da * db, da * db);
  for (const auto& [a, b] : pass_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= party_a.size() ||
        static_cast<std::size_t>(b) >= party_b.size())
      throw ValidationFailed("pass pair indexes outside the projector lists");
    e += kron(party_a[static_cast<std::size_t>(a)],
              party_b[static_cast<std::size_t>(b)]);
  }
  return e;
}

void VerificationStrategy::validate() const {
  if (tests.empty()) throw ValidationFailed("strategy has no tests");
  double psum = 0.0;
  CMatrix acc = CMatrix::zero(omega.rows(), omega.cols());
  for (const auto& [p, op] : tests) {
    if (p <= 0.0) throw ValidationFailed("test probability must be positive");
    psum += p;
    if (!op.matrix.is_hermitian(1e-10))
      throw ValidationFailed("test operator is not Hermitian");
    const CVector fixed = op.matrix.apply(target.vector);
    if ((fixed - target.vector).norm() > 1e-10)
      throw ValidationFailed("test operator does not fix the target");
    if ((op.realization.test_matrix() - op.matrix).max_abs() > 1e-10)
      throw ValidationFailed("realization does not reproduce the test matrix");
    for (const auto& ps : {op.realization.party_a, op.realization.party_b})
      if (projectors_to_identity_defect(ps).max_abs() > 1e-9)
        throw ValidationFailed("party projectors do not resolve the identity");
    acc += Complex{p, 0.0} * op.matrix;
  }
  if (std::abs(psum - 1.0) > 1e-12)
    throw ValidationFailed("test probabilities must sum to one");
  if ((acc - omega).max_abs() > 1e-10)
    throw ValidationFailed("omega is not the weighted test sum");
  if (std::abs(nu - spectral_gap(omega, target.vector)) > 1e-9)
    throw ValidationFailed("stored nu disagrees with the spectral gap");
}

VerificationStrategy single_projector_strategy(const CVector& factor_a,
                                               const CVector& factor_b) {
  const std::size_t da = factor_a.dim();
  const std::size_t db = factor_b.dim();
  const CVector a = factor_a.normalized();
  const CVector b = factor_b.normalized();

  CMatrix acol(da, 1), bcol(db, 1);
  acol.set_column(0, a);
  bcol.set_column(0, b);
  const CMatrix basis_a = complete_basis(acol, 1);
  const CMatrix basis_b = complete_basis(bcol, 1);

  MeasurementSetting setting;
  for (std::size_t j = 0; j < da; ++j)
    setting.party_a.push_back(outer(basis_a.column(j), basis_a.column(j)));
  for (std::size_t j = 0; j < db; ++j)
    setting.party_b.push_back(outer(basis_b.column(j), basis_b.column(j)));
  setting.pass_pairs = {{0, 0}};

  VerificationStrategy strat;
  strat.target = BipartiteState(kron(a, b), da, db);
  TestOperator op;
  op.matrix = setting.test_matrix();
  op.realization = std::move(setting);
  strat.tests.push_back({1.0, std::move(op)});
  strat.omega = strat.tests.front().op.matrix;
  strat.nu = spectral_gap(strat.omega, strat.target.vector);
  strat.validate();
  return strat;
}

VerificationStrategy two_setting_protocol(const BipartiteState& state) {
  const SchmidtData sd = schmidt_decompose(state);
  const std::size_t r = sd.rank;

  if (r <= 1) {
    // product target: one setting suffices
    const CVector a = sd.left_basis.column(0);
    CVector b = sd.right_basis.column(0);
    // fold the phase so a (x) b equals the state exactly
    const Complex ov = inner(kron(a, b), state.vector);
    b *= ov;
    return single_projector_strategy(a, b);
  }

  // P1: both parties measure their Schmidt basis, pass on equal outcomes
  MeasurementSetting setting1;
  for (std::size_t j = 0; j < state.dim_a; ++j)
    setting1.party_a.push_back(
        outer(sd.left_basis.column(j), sd.left_basis.column(j)));
  for (std::size_t j = 0; j < state.dim_b; ++j)
    setting1.party_b.push_back(
        outer(sd.right_basis.column(j), sd.right_basis.column(j)));
  for (std::size_t j = 0; j < r; ++j)
    setting1.pass_pairs.push_back({static_cast<int>(j), static_cast<int>(j)});

  // P2: A tests the uniform superposition u, B the coefficient vector v;
  // the only failing pair is (u, not-v)
  CVector u(state.dim_a);
  for (std::size_t j = 0; j < r; ++j)
    u += Complex{1.0 / std::sqrt(static_cast<double>(r)), 0.0} *
         sd.left_basis.column(j);
  CVector v(state.dim_b);
  for (std::size_t j = 0; j < r; ++j)
    v += Complex{sd.coeffs[j], 0.0} * sd.right_basis.column(j);
  v = v.normalized();

  const CMatrix pu = outer(u, u);
  const CMatrix pv = outer(v, v);
  MeasurementSetting setting2;
  setting2.party_a = {pu, CMatrix::identity(state.dim_a) - pu};
  setting2.party_b = {pv, CMatrix::identity(state.dim_b) - pv};
  setting2.pass_pairs = {{0, 0}, {1, 0}, {1, 1}};

  VerificationStrategy strat;
  strat.target = state;
  TestOperator t1;
  t1.matrix = setting1.test_matrix();
  t1.realization = std::move(setting1);
  TestOperator t2;
  t2.matrix = setting2.test_matrix();
  t2.realization = std::move(setting2);
  strat.tests.push_back({0.5, std::move(t1)});
  strat.tests.push_back({0.5, std::move(t2)});

  strat.omega = CMatrix::zero(state.vector.dim(), state.vector.dim());
  for (const auto& [p, op] : strat.tests)
    strat.omega += Complex{p, 0.0} * op.matrix;
  strat.nu = spectral_gap(strat.omega, state.vector);
  strat.validate();
  return strat;
}

double spectral_gap(const CMatrix& omega, const CVector& target) {
  if (omega.rows() != omega.cols() || omega.rows() != target.dim())
    throw DimensionMismatch("omega/target dimensions disagree");
  const EigResult eig = hermitian_eig(omega);
  if (eig.values.front() > 1.0 + 1e-9 || eig.values.back() < -1e-9)
    throw ValidationFailed("omega is not contained in [0, I]");
  const CVector fixed = omega.apply(target);
  if ((fixed - target).norm() > 1e-9)
    throw TargetNotFixed("omega does not fix the target state");
  if (eig.values.size() < 2) return 1.0;
  return 1.0 - eig.values[1];
}

std::int64_t sample_count(double nu, double eps, double delta) {
  if (nu <= 0.0) throw ZeroGap("spectral gap must be positive");
  if (nu > 1.0 + 1e-12) throw Error("spectral gap exceeds one");
  if (eps <= 0.0 || eps >= 1.0) throw Error("eps must lie in (0,1)");
  if (delta <= 0.0 || delta >= 1.0) throw Error("delta must lie in (0,1)");
  const double n = std::log(delta) / std::log1p(-nu * eps);
  return static_cast<std::int64_t>(std::ceil(n));
}

double max_pass_probability(const CMatrix& omega, const CVector& target,
                            double eps) {
  if (eps < 0.0 || eps > 1.0) throw Error("eps must lie in [0,1]");
  return 1.0 - spectral_gap(omega, target) * eps;
}

}  // namespace qvk
