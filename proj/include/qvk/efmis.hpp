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

#include <array>

#include "qvk/canonical_form.hpp"
#include "qvk/complex_matrix.hpp"

namespace qvk {

enum class EfmisCase { Case1, Case2, Case3, GateLibrary };

/// Single-qubit factorizations of a test state and of its image under
/// the target; the kron of each pair reproduces the state exactly.
struct ProductFactors {
  CVector input_a, input_b;
  CVector output_a, output_b;
};

struct ValidationReport {
  std::array<double, 4> input_concurrence{};
  std::array<double, 4> output_concurrence{};
  int rank = 0;
  bool connected = false;
  CMatrix gram;
  bool pass = false;
};

/// Entanglement-free minimal identification set: four product states
/// forming a connected basis whose images under the target stay product.
struct Efmis {
  std::array<CVector, 4> states;  // computational basis, dim 4
  std::array<ProductFactors, 4> factors;
  CMatrix gram;  // gram(j,k) = <state_j|state_k>
  EfmisCase case_tag = EfmisCase::Case3;
  CMatrix target;  // the unitary the set was validated against
  ValidationReport report;
};

/// Magic-basis coefficients of the generic-case construction.
struct Case3Coeffs {
  Complex gamma0_sq;
  std::array<Complex, 4> gamma;
};

/// Closed-form coefficients for a1 > a3, a2 < pi/4 inside the canonical
/// cell. Throws CasePreconditionViolated outside that range.
Case3Coeffs case3_coeffs(const CanonicalAngles& angles);

/// Builds and validates an EFMIS for U(angles). Case dispatch:
/// a1 = a2 = pi/4 and the identity share one literal four-state set; all
/// remaining four-setting angles go through the magic-basis sign-pattern
/// construction. Throws InSE for five-setting angles and ValidationFailed
/// when any invariant misses tolerance.
Efmis synthesize(const CanonicalAngles& angles);

enum class GateKind { Cnot, Cz, CPhase, Swap };

struct GateSpec {
  GateKind kind = GateKind::Cnot;
  double phi = 0.0;  // CPhase phase, radians, in (0, 2pi)
};

CMatrix gate_matrix(const GateSpec& gate);

/// The published per-gate sets, validated against the literal matrices.
Efmis gate_efmis(const GateSpec& gate);

enum class ConjugateDirection { Pre, Post };

/// Moves an EFMIS through a local frame. Pre maps the states by the
/// adjoint of the tilde pair and composes the target on the right; Post
/// leaves the states alone and composes the frame's outer pair on the
/// left. The result is revalidated.
Efmis conjugate_set(const Efmis& set, const LocalUnitaryFrame& frame,
                    ConjugateDirection direction);

/// Full EFMIS check of four candidate states against a target unitary.
ValidationReport validate(const std::array<CVector, 4>& states,
                          const CMatrix& target);

/// Packages literal states into a validated EFMIS (ValidationFailed when
/// they do not qualify for the target).
Efmis assemble_efmis(std::array<CVector, 4> states, CMatrix target,
                     EfmisCase tag);

/// Exact single-qubit factors of a product state (and of its image).
/// Throws ValidationFailed when the state is not product.
ProductFactors product_factors(const CVector& state, const CMatrix& target);

/// Local frames of the worked gates.
LocalUnitaryFrame cnot_frame();
LocalUnitaryFrame cphase_conjugate_frame(double phi);

}  // namespace qvk
