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

#include <utility>
#include <vector>

#include "qvk/canonical_form.hpp"
#include "qvk/complex_matrix.hpp"
#include "qvk/efmis.hpp"
#include "qvk/product_geometry.hpp"
#include "qvk/state_verification.hpp"

namespace qvk {

/// Minimum number of experimental settings for an ordinary protocol:
/// five on the measure-zero equal-coefficient class, four otherwise.
int mu(const CMatrix& u);

/// (d, 2d) bounds for a dA x dB bipartite unitary.
std::pair<int, int> mu_bounds_general(int dim_a, int dim_b);

/// Setting count from the product-span dimension: 2d - d_prod below full
/// span; at full span, d when the product set is connected, d+1 otherwise.
int mu_from_dprod(int d, int d_prod, bool prod_connected);

struct GateTest {
  double probability = 0.0;
  CVector input;
  VerificationStrategy strategy;  // verifies the output state
  int setting_count = 0;
};

struct GateProtocol {
  CMatrix target;
  std::vector<GateTest> tests;
  int setting_count = 0;
  RegionKind classification = RegionKind::SEF;
  bool ordinary = true;

  void validate() const;  // throws ValidationFailed
};

/// Protocol for the canonical-cell unitary U(angles): the four-state
/// entanglement-free set when one exists, otherwise three product states
/// from the constraint family plus one connecting product state whose
/// entangled image gets the two-projector strategy.
GateProtocol build_protocol(const CanonicalAngles& angles);

/// Protocol built on the published set of a library gate.
GateProtocol build_protocol(const GateSpec& gate);

/// Protocol for a literal 4x4 unitary. Library gates are recognized
/// directly; anything else must match a canonical-form unitary up to a
/// global phase or complex conjugation (SynthesisFailed otherwise, since
/// local-frame extraction for arbitrary targets is out of scope).
GateProtocol build_protocol(const CMatrix& u);

/// Shared protocol assembly: uniform probabilities, one setting per
/// product image, the two-projector strategy per entangled image.
GateProtocol assemble_protocol(const CMatrix& target,
                               const std::vector<CVector>& test_states,
                               RegionKind classification);

/// CPTP map on two-qubit densities held as an unnormalized Choi matrix.
class QuantumChannel {
 public:
  /// Validates Hermiticity, complete positivity and trace preservation
  /// within 1e-8; throws NotCPTP.
  static QuantumChannel from_choi(CMatrix choi);
  static QuantumChannel from_unitary(const CMatrix& u);
  /// (1-p) U rho U^dag + p I/d.
  static QuantumChannel depolarizing(const CMatrix& u, double p);

  std::size_t dim() const { return dim_; }
  const CMatrix& choi() const { return choi_; }
  CMatrix apply(const CMatrix& rho) const;

 private:
  QuantumChannel(CMatrix choi, std::size_t dim)
      : choi_(std::move(choi)), dim_(dim) {}
  CMatrix choi_;  // choi[(i,k),(j,l)] = <k| Lambda(|i><j|) |l>
  std::size_t dim_ = 0;
};

/// Average pass probability of the channel against the protocol:
/// sum_j p_j tr(Omega_j Lambda(rho_j)).
double pass_probability(const GateProtocol& protocol,
                        const QuantumChannel& channel);

}  // namespace qvk
