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

#include "qvk/rng.hpp"

namespace qvk {

CVector random_state(std::size_t dim, CounterRng& rng) {
  CVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = rng.complex_normal();
  return v.normalized();
}

CMatrix random_unitary(std::size_t dim, CounterRng& rng) {
  CMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    CVector col(dim);
    for (std::size_t i = 0; i < dim; ++i) col[i] = rng.complex_normal();
    for (std::size_t c = 0; c < j; ++c) {
      const CVector prev = u.column(c);
      col -= inner(prev, col) * prev;
    }
    u.set_column(j, col.normalized());
  }
  return u;
}

CMatrix random_hermitian(std::size_t dim, CounterRng& rng) {
  CMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  CMatrix h = g;
  h += g.adjoint();
  h *= Complex{0.5, 0.0};
  const double scale = h.frobenius_norm();
  if (scale > 0.0) h *= Complex{1.0 / scale, 0.0};
  h *= Complex{static_cast<double>(dim), 0.0};  // keep O(1) eigenvalue spread
  return h;
}

}  // namespace qvk
