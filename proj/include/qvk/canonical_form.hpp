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

#include "qvk/complex_matrix.hpp"

namespace qvk {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEqTol = 1e-8;  // angle/spectrum equality

/// Canonical interaction angles of a two-qubit unitary. The canonical
/// cell is 0 <= a3 <= a2 <= a1 <= pi/4.
struct CanonicalAngles {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  bool in_canonical_cell(double tol = kEqTol) const;
};

/// Closed-form expansion coefficients of the canonical unitary over the
/// sigma_k (x) sigma_k basis.
std::array<Complex, 4> zeta(const CanonicalAngles& angles);

/// sum_k zeta_k sigma_k (x) sigma_k, a 4x4 unitary.
CMatrix build_canonical(const CanonicalAngles& angles);

/// Operator Schmidt coefficients, nonincreasing; squares sum to one.
struct SchmidtSpectrum4 {
  std::array<double, 4> s{};
};

/// Singular values of the reshuffled unitary, halved to the Choi-state
/// normalization. Throws NotUnitary.
SchmidtSpectrum4 operator_schmidt_spectrum(const CMatrix& u);

/// Count of Schmidt coefficients above tol; 1, 2 or 4 for canonical input.
int schmidt_rank(const CMatrix& u, double tol = kEqTol);

/// Inversion of a Schmidt spectrum back to canonical angles. Spectra with
/// distinct top coefficients pin the angles uniquely; coinciding top
/// coefficients identify an a1 = pi/4 family determined by
/// cos(2 a2) cos(2 a3) alone.
struct AngleRecovery {
  enum class Kind { Unique, DegenerateFamily };
  Kind kind = Kind::Unique;
  CanonicalAngles angles;        // for DegenerateFamily, the a3 = 0 member
  double family_product = 0.0;   // cos(2 a2) cos(2 a3); DegenerateFamily only
};

/// Throws InfeasibleSpectrum when no canonical-cell angles reproduce the
/// spectrum within 1e-7.
AngleRecovery recover_angles(const SchmidtSpectrum4& spectrum,
                             double tol = kEqTol);

/// True when both unitaries share the Schmidt spectrum entrywise.
bool same_schmidt_class(const CMatrix& u, const CMatrix& v,
                        double tol = kEqTol);

/// Bell basis sigma_k (x) I |Phi+>.
std::array<CVector, 4> bell_basis();

/// Magic basis: maximally entangled states in which product states have
/// vanishing squared-coefficient sums.
std::array<CVector, 4> magic_basis();

/// Local frames decorating a canonical core: U = (vA x wB) Uc (vtA x wtB).
struct LocalUnitaryFrame {
  CMatrix v_a, w_b, v_tilde_a, w_tilde_b;

  void check() const;  // throws NotUnitary on any non-unitary entry
};

}  // namespace qvk
