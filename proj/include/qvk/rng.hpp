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

#include <cmath>
#include <cstdint>

#include "qvk/complex_matrix.hpp"

namespace qvk {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based generator (splitmix64 core). Substreams derived from
/// (seed, stream) are independent, so per-trial streams reproduce
/// bit-exactly regardless of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(mix64(seed)) {}
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed) ^ mix64(~stream))) {}

  CounterRng substream(std::uint64_t stream) const {
    CounterRng r(0);
    r.key_ = mix64(key_ ^ mix64(~stream));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * (++counter_));
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal (Box-Muller).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    spare_ = r * std::sin(two_pi * u2);
    have_spare_ = true;
    return r * std::cos(two_pi * u2);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random pure state of the given dimension.
CVector random_state(std::size_t dim, CounterRng& rng);

/// Haar-random unitary via Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t dim, CounterRng& rng);

/// GUE-style random Hermitian matrix, normalized to unit spectral scale.
CMatrix random_hermitian(std::size_t dim, CounterRng& rng);

}  // namespace qvk
