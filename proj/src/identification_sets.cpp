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

#include "qvk/identification_sets.hpp"

#include <cmath>
#include <deque>

namespace qvk {

namespace {

void check_set(const StateSet& set) {
  if (set.states.empty()) throw Error("state set is empty");
  const std::size_t d = set.states.front().dim();
  for (const auto& s : set.states) {
    if (s.dim() != d) throw DimensionMismatch("state set mixes dimensions");
    if (std::abs(s.norm() - 1.0) > 1e-12)
      throw ValidationFailed("state set contains a non-normalized state");
  }
  if (!set.labels.empty() && set.labels.size() != set.states.size())
    throw Error("label count does not match state count");
}

}  // namespace

bool TransitionGraph::connected() const {
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> frontier{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (adjacency[i][j] && !seen[j]) {
        seen[j] = true;
        ++count;
        frontier.push_back(j);
      }
  }
  return count == n;
}

TransitionGraph transition_graph(const StateSet& set, double tol) {
  check_set(set);
  if (tol <= 0.0) throw Error("overlap tolerance must be positive");
  const std::size_t n = set.states.size();
  TransitionGraph g;
  g.n = n;
  g.overlap_tolerance = tol;
  g.adjacency.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool edge = std::abs(inner(set.states[i], set.states[j])) > tol;
      g.adjacency[i][j] = g.adjacency[j][i] = edge;
    }
  return g;
}

CMatrix stacked(const StateSet& set) {
  const std::size_t d = set.states.front().dim();
  CMatrix m(d, set.states.size());
  for (std::size_t j = 0; j < set.states.size(); ++j)
    m.set_column(j, set.states[j]);
  return m;
}

SpanCheck is_connected_spanning(const StateSet& set) {
  if (set.states.empty()) return {false, false};
  check_set(set);
  const std::size_t d = set.states.front().dim();
  SpanCheck out;
  out.connected = transition_graph(set).connected();
  out.spanning =
      numerical_rank(stacked(set), kSpanRankTol) == static_cast<int>(d);
  return out;
}

StateSet extract_connected_basis(const StateSet& set) {
  const SpanCheck check = is_connected_spanning(set);
  if (!check.is_identification_set())
    throw NotConnectedSpanning("input is not a connected spanning set");

  const std::size_t d = set.states.front().dim();
  const bool labelled = !set.labels.empty();
  StateSet out;
  std::vector<bool> taken(set.states.size(), false);

  // Greedy growth in input order: take a state when it raises the rank and
  // touches the current component; rescan from the start after each pick.
  while (out.states.size() < d) {
    bool advanced = false;
    for (std::size_t i = 0; i < set.states.size() && !advanced; ++i) {
      if (taken[i]) continue;
      const CVector& cand = set.states[i];
      bool touches = out.states.empty();
      for (const auto& member : out.states)
        if (std::abs(inner(member, cand)) > kOverlapTol) {
          touches = true;
          break;
        }
      if (!touches) continue;
      StateSet trial = out;
      trial.labels.clear();
      trial.states.push_back(cand);
      if (numerical_rank(stacked(trial), kSpanRankTol) !=
          static_cast<int>(out.states.size()) + 1)
        continue;
      out.states.push_back(cand);
      if (labelled) out.labels.push_back(set.labels[i]);
      taken[i] = true;
      advanced = true;
    }
    if (!advanced)
      throw NotConnectedSpanning(
          "greedy growth stalled before reaching a basis");
  }
  return out;
}

StateSet standard_mis(std::size_t d) {
  if (d == 0) throw Error("dimension must be positive");
  StateSet out;
  if (d == 1) {
    out.states.push_back(CVector::basis(1, 0));
    out.labels.push_back("0");
    return out;
  }
  for (std::size_t j = 1; j < d; ++j) {
    out.states.push_back(CVector::basis(d, j));
    out.labels.push_back(std::to_string(j));
  }
  CVector phi(d);
  for (std::size_t j = 0; j < d; ++j)
    phi[j] = 1.0 / std::sqrt(static_cast<double>(d));
  out.states.push_back(phi);
  out.labels.push_back("phi");
  return out;
}

}  // namespace qvk
