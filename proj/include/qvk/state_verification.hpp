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

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qvk/complex_matrix.hpp"

namespace qvk {

/// Pure state on H_A (x) H_B, stored in the product computational basis
/// with index a * dim_b + b.
struct BipartiteState {
  CVector vector;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;

  BipartiteState() = default;
  BipartiteState(CVector v, std::size_t da, std::size_t db);
};

struct SchmidtData {
  std::vector<double> coeffs;  // min(dA,dB) entries, nonincreasing
  CMatrix left_basis;          // dA x dA orthonormal, Schmidt vectors first
  CMatrix right_basis;         // dB x dB orthonormal
  std::size_t rank = 0;        // coefficients above 1e-10
};

SchmidtData schmidt_decompose(const BipartiteState& state);

/// One nonadaptive local projective measurement with a pass rule: each
/// party's projector list resolves the identity, and the test passes on
/// the listed outcome pairs.
struct MeasurementSetting {
  std::vector<CMatrix> party_a;
  std::vector<CMatrix> party_b;
  std::vector<std::pair<int, int>> pass_pairs;

  CMatrix test_matrix() const;  // sum of pass-outcome product projectors
};

struct TestOperator {
  CMatrix matrix;  // Hermitian, 0 <= E <= I, E|target> = |target>
  MeasurementSetting realization;
  std::optional<BipartiteState> input_state;
};

struct WeightedTest {
  double probability = 0.0;
  TestOperator op;
};

struct VerificationStrategy {
  std::vector<WeightedTest> tests;
  BipartiteState target;
  CMatrix omega;   // sum_l p_l E_l
  double nu = 0.0;  // 1 - second largest eigenvalue of omega

  /// Recomputes omega/nu from the tests and checks every invariant;
  /// throws ValidationFailed on any miss.
  void validate() const;
};

/// The two-projector protocol: P1 projects onto the diagonal of the
/// Schmidt bases, P2 pairs the uniform superposition on A with the
/// coefficient vector on B. Product targets get the single test
/// |target><target| instead.
VerificationStrategy two_setting_protocol(const BipartiteState& state);

/// Strategy with the single product test |a x b><a x b|, realized by
/// projective measurements onto bases containing the factors.
VerificationStrategy single_projector_strategy(const CVector& factor_a,
                                               const CVector& factor_b);

/// 1 - (second largest eigenvalue of omega). Throws TargetNotFixed when
/// omega does not fix the target.
double spectral_gap(const CMatrix& omega, const CVector& target);

/// Minimum number of tests to certify infidelity below eps at
/// significance delta: ceil(ln delta / ln(1 - nu * eps)).
std::int64_t sample_count(double nu, double eps, double delta);

/// Worst-case average pass probability of an eps-infidelity source.
double max_pass_probability(const CMatrix& omega, const CVector& target,
                            double eps);

}  // namespace qvk
