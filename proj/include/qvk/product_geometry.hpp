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
#include <cstdint>

#include "qvk/canonical_form.hpp"
#include "qvk/complex_matrix.hpp"

namespace qvk {

/// Concurrence 2|c1 c4 - c2 c3| of a two-qubit pure state in the
/// computational basis; zero exactly on product states.
double concurrence(const CVector& state4);

struct ConstraintResidual {
  double c_in = 0.0;   // concurrence of the input
  double c_out = 0.0;  // concurrence of the canonical image
};

/// Input and output concurrences under U(angles); the input belongs to
/// Prod(U) iff both vanish.
ConstraintResidual constraint_residual(const CanonicalAngles& angles,
                                       const CVector& input);

/// Magic-basis coefficients of a normalized two-qubit state.
struct MagicCoeffs {
  std::array<Complex, 4> gamma{};
};

/// Completes a (gamma1, gamma2) seed to a full magic-basis solution of the
/// product-state constraint: gamma3^2 and gamma4^2 are fixed linear
/// combinations of the seed squares, and the result is renormalized.
/// Requires 0 < a1 + a2 < pi/2 (RangeUnsupported otherwise) and a nonzero
/// seed (DegenerateSeed).
MagicCoeffs solve_constraint_magic(const CanonicalAngles& angles, Complex g1,
                                   Complex g2);

CVector magic_to_computational(const std::array<Complex, 4>& gamma);
std::array<Complex, 4> computational_to_magic(const CVector& state);

/// Square root with nonnegative real part; ties broken toward
/// nonnegative imaginary part. The shared branch convention for every
/// gamma extraction in the toolkit.
Complex principal_sqrt(Complex z);

/// Folds arbitrary angles into the canonical cell using the pi/2
/// periodicity, reflection about pi/4 per axis, and a descending sort.
/// The representative shares the Schmidt spectrum and the setting count
/// of the input.
CanonicalAngles reduce_angles(double a1, double a2, double a3);

enum class RegionKind { SE, SEF };

struct RegionTag {
  RegionKind tag = RegionKind::SEF;
  CanonicalAngles reduced;
};

/// Five-setting region: all three reduced angles equal and strictly
/// interior; everything else is four-setting (entanglement-free) range.
RegionTag classify_region(double a1, double a2, double a3);

/// Same classification from the Schmidt spectrum of a literal unitary:
/// five settings exactly when s0 > s1 = s2 = s3 > 0.
RegionKind classify_by_spectrum(const CMatrix& u);

/// Numerical rank of the span of sampled product states with product
/// images. Members come from the magic-basis constraint family when the
/// canonical angles are recoverable, with structured rejection sampling
/// as the fallback. The span dimension is invariant under local frames
/// and conjugation, so sampling the canonical representative is exact.
/// Deterministic for a fixed seed.
int d_prod_estimate(const CMatrix& u, int samples = 200,
                    std::uint64_t seed = 0);

struct RegionSample {
  double zeta0_sq = 0.0;
  std::array<double, 3> xi{};  // |zeta_j|^2 / (1 - |zeta_0|^2)
};

/// Barycentric cross-section coordinates of the Schmidt spectrum.
/// Throws ProductUnitary when |zeta_0| = 1.
RegionSample region_sample(const CanonicalAngles& angles);

}  // namespace qvk
