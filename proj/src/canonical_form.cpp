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

#include "qvk/canonical_form.hpp"

#include <algorithm>
#include <cmath>

namespace qvk {

namespace {

const Complex kImag{0.0, 1.0};

double clamp_pm1(double x) { return std::min(1.0, std::max(-1.0, x)); }

SchmidtSpectrum4 spectrum_from_angles(const CanonicalAngles& a) {
  const auto z = zeta(a);
  SchmidtSpectrum4 out;
  for (int k = 0; k < 4; ++k) out.s[static_cast<std::size_t>(k)] = std::abs(z[static_cast<std::size_t>(k)]);
  std::sort(out.s.begin(), out.s.end(), std::greater<double>());
  return out;
}

double spectrum_distance(const SchmidtSpectrum4& a, const SchmidtSpectrum4& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(a.s[k] - b.s[k]));
  return m;
}

}  // namespace

bool CanonicalAngles::in_canonical_cell(double tol) const {
  return a3 >= -tol && a3 <= a2 + tol && a2 <= a1 + tol &&
         a1 <= kPi / 4.0 + tol;
}

std::array<Complex, 4> zeta(const CanonicalAngles& angles) {
  const double c1 = std::cos(angles.a1), s1 = std::sin(angles.a1);
  const double c2 = std::cos(angles.a2), s2 = std::sin(angles.a2);
  const double c3 = std::cos(angles.a3), s3 = std::sin(angles.a3);
  return {
      Complex{c1 * c2 * c3, -s1 * s2 * s3},
      Complex{c1 * s2 * s3, -s1 * c2 * c3},
      Complex{s1 * c2 * s3, -c1 * s2 * c3},
      Complex{s1 * s2 * c3, -c1 * c2 * s3},
  };
}

CMatrix build_canonical(const CanonicalAngles& angles) {
  const auto z = zeta(angles);
  CMatrix u(4, 4);
  for (int k = 0; k < 4; ++k) {
    const CMatrix term = kron(pauli(k), pauli(k));
    u += z[static_cast<std::size_t>(k)] * term;
  }
  return u;
}

SchmidtSpectrum4 operator_schmidt_spectrum(const CMatrix& u) {
  if (u.rows() != 4 || u.cols() != 4 || !u.is_unitary(1e-9))
    throw NotUnitary("operator Schmidt spectrum expects a 4x4 unitary");
  // reshuffle M[(a,a'),(b,b')] = U[(a,b),(a',b')], then halve
  CMatrix m(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t bp = 0; bp < 2; ++bp)
          m(a * 2 + ap, b * 2 + bp) = u(a * 2 + b, ap * 2 + bp);
  const SvdResult s = svd(m);
  SchmidtSpectrum4 out;
  for (std::size_t k = 0; k < 4; ++k) out.s[k] = s.values[k] / 2.0;
  return out;
}

int schmidt_rank(const CMatrix& u, double tol) {
  const SchmidtSpectrum4 spec = operator_schmidt_spectrum(u);
  int r = 0;
  for (double v : spec.s)
    if (v > tol) ++r;
  return r;
}

AngleRecovery recover_angles(const SchmidtSpectrum4& spectrum, double tol) {
  const auto& s = spectrum.s;
  AngleRecovery out;

  if (s[0] <= s[1] + tol) {
    // a1 = pi/4 family: s0^2 = s1^2 = (1 + cos(2a2)cos(2a3))/4 and
    // s2^2 = s3^2 = (1 - cos(2a2)cos(2a3))/4. Extracting the product from
    // both pairs keeps the inversion stable when s2, s3 are tiny; on an
    // exact family spectrum it reduces to 4 s0^2 - 1 by normalization.
    out.kind = AngleRecovery::Kind::DegenerateFamily;
    out.family_product = clamp_pm1(s[0] * s[0] + s[1] * s[1] - s[2] * s[2] -
                                   s[3] * s[3]);
    out.angles = {kPi / 4.0, 0.5 * std::acos(out.family_product), 0.0};
    const SchmidtSpectrum4 rebuilt = spectrum_from_angles(out.angles);
    if (spectrum_distance(rebuilt, spectrum) > 1e-7)
      throw InfeasibleSpectrum(
          "no a1 = pi/4 family member reproduces the spectrum");
    return out;
  }

  // Unique branch. The squared-sum relations fix the pairwise products of
  // C_j = cos(2 a_j):
  //   s0^2 + s3^2 = (1 + C1 C2)/2
  //   s0^2 - s2^2 = C2 (C1 + C3)/2
  //   s0^2 - s3^2 = C3 (C1 + C2)/2
  const double p12 = 2.0 * (s[0] * s[0] + s[3] * s[3]) - 1.0;
  const double p23 = 2.0 * (s[0] * s[0] - s[2] * s[2]) - p12;
  const double p13 = 2.0 * (s[0] * s[0] - s[3] * s[3]) - p23;
  if (p12 <= 0.0 || p23 <= 0.0 || p13 <= 0.0)
    throw InfeasibleSpectrum("product system has no canonical-cell solution");

  // C1 from the products is accurate in absolute terms across the cell.
  // Near-one cosines cannot be resolved that way, so the two smaller
  // angles come from relations their squares enter linearly:
  //   s2^2 + s3^2 = x2 + x3 - 2 x2 x3,   s2^2 - s3^2 = C1 (x2 - x3)
  //   s1^2 + s2^2 = x1 + x2 - 2 x1 x2            with x_j = sin^2(a_j)
  const double c1 = std::min(1.0, std::sqrt(p12 * p13 / p23));
  const double u = s[2] * s[2] + s[3] * s[3];
  // feasible splits never exceed the pair sum; the cap suppresses the
  // noise blowup of the division when c1 is tiny
  const double v =
      std::min(u, std::max(0.0, (s[2] * s[2] - s[3] * s[3]) / c1));
  const double disc = std::max(0.0, 1.0 - 2.0 * u + v * v);
  const double t = 1.0 - std::sqrt(disc);
  auto clamp_half = [](double x) { return std::min(0.5, std::max(0.0, x)); };
  const double x2 = clamp_half(0.5 * (t + v));
  const double x3 = clamp_half(0.5 * (t - v));
  const double c2 = 1.0 - 2.0 * x2;
  if (c2 < 1e-12)
    throw InfeasibleSpectrum("product system has no canonical-cell solution");
  const double x1 = clamp_half((s[1] * s[1] + s[2] * s[2] - x2) / c2);

  out.kind = AngleRecovery::Kind::Unique;
  out.angles = {std::asin(std::sqrt(x1)), std::asin(std::sqrt(x2)),
                std::asin(std::sqrt(x3))};
  const SchmidtSpectrum4 rebuilt = spectrum_from_angles(out.angles);
  if (spectrum_distance(rebuilt, spectrum) > 1e-7)
    throw InfeasibleSpectrum("spectrum lies outside the accessible region");
  return out;
}

bool same_schmidt_class(const CMatrix& u, const CMatrix& v, double tol) {
  const SchmidtSpectrum4 su = operator_schmidt_spectrum(u);
  const SchmidtSpectrum4 sv = operator_schmidt_spectrum(v);
  return spectrum_distance(su, sv) <= tol;
}

std::array<CVector, 4> bell_basis() {
  CVector phi(4);
  phi[0] = phi[3] = 1.0 / std::sqrt(2.0);
  std::array<CVector, 4> out;
  for (int k = 0; k < 4; ++k)
    out[static_cast<std::size_t>(k)] =
        kron(pauli(k), CMatrix::identity(2)).apply(phi);
  return out;
}

std::array<CVector, 4> magic_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<CVector, 4> out;
  for (auto& v : out) v = CVector(4);
  out[0][0] = r;
  out[0][3] = r;  // (|00> + |11>)/sqrt2
  out[1][0] = kImag * r;
  out[1][3] = -kImag * r;  // i(|00> - |11>)/sqrt2
  out[2][1] = kImag * r;
  out[2][2] = kImag * r;  // i(|01> + |10>)/sqrt2
  out[3][1] = r;
  out[3][2] = -r;  // (|01> - |10>)/sqrt2
  return out;
}

void LocalUnitaryFrame::check() const {
  for (const CMatrix* m : {&v_a, &w_b, &v_tilde_a, &w_tilde_b})
    if (m->rows() != 2 || m->cols() != 2 || !m->is_unitary(1e-10))
      throw NotUnitary("local frame entry is not a qubit unitary");
}

}  // namespace qvk
