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

#include <string>
#include <vector>

#include "qvk/complex_matrix.hpp"

namespace qvk {

/// A finite set of unit vectors sharing one dimension. Labels are
/// optional; when present they track the states positionally.
struct StateSet {
  std::vector<CVector> states;
  std::vector<std::string> labels;
};

/// Graph on the states with an edge wherever the overlap magnitude
/// exceeds the tolerance.
struct TransitionGraph {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adjacency;
  double overlap_tolerance = 0.0;

  bool connected() const;
};

inline constexpr double kOverlapTol = 1e-9;
inline constexpr double kSpanRankTol = 1e-9;

TransitionGraph transition_graph(const StateSet& set, double tol = kOverlapTol);

struct SpanCheck {
  bool connected = false;
  bool spanning = false;

  bool is_identification_set() const { return connected && spanning; }
};

/// A set identifies unitaries exactly when it is connected and spans.
SpanCheck is_connected_spanning(const StateSet& set);

/// Greedy maximal connected linearly independent subset of a connected
/// spanning set; the result is a connected basis (hence a MIS).
/// Throws NotConnectedSpanning if the input fails the precondition.
StateSet extract_connected_basis(const StateSet& set);

/// {|1>,...,|d-1>, |phi>} with |phi> the uniform superposition; the
/// standard d-element MIS. d = 1 degenerates to {|0>}.
StateSet standard_mis(std::size_t d);

/// States as columns of a d x n matrix.
CMatrix stacked(const StateSet& set);

}  // namespace qvk
