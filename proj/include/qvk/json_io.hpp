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

#include <json.hpp>
#include <optional>
#include <string>

#include "qvk/efmis.hpp"
#include "qvk/gate_protocol.hpp"
#include "qvk/identification_sets.hpp"
#include "qvk/simulator.hpp"
#include "qvk/state_verification.hpp"

namespace qvk {

using Json = nlohmann::json;

/// Malformed document structure (as opposed to a failed invariant).
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

// Matrices: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
// Vectors: {"dim": d, "data": [[re, im], ...]}.
Json to_json(const CMatrix& m);
Json to_json(const CVector& v);
CMatrix matrix_from_json(const Json& j);
CVector vector_from_json(const Json& j);

Json to_json(const BipartiteState& s);
BipartiteState bipartite_from_json(const Json& j);

Json to_json(const StateSet& s);
StateSet state_set_from_json(const Json& j);

/// Graphs serialize as edge lists.
Json to_json(const TransitionGraph& g);

Json to_json(const MeasurementSetting& s);
MeasurementSetting setting_from_json(const Json& j);

Json to_json(const TestOperator& op);
TestOperator test_operator_from_json(const Json& j);

Json to_json(const VerificationStrategy& s);
/// Rebuilds and revalidates every invariant; throws on any miss.
VerificationStrategy strategy_from_json(const Json& j);

Json to_json(const Efmis& e);

Json to_json(const GateProtocol& p);
GateProtocol protocol_from_json(const Json& j);

Json to_json(const NoiseModel& n);
NoiseModel noise_from_json(const Json& j);

Json to_json(const SimReport& r);
Json to_json(const SampleComplexityReport& r);

/// One simulation request: a strategy or protocol (inline or via
/// {"file": path} relative to base_dir), a noise model, and run controls.
struct Scenario {
  enum class Kind { State, Gate, SampleComplexity };
  Kind kind = Kind::State;
  std::optional<VerificationStrategy> strategy;
  std::optional<GateProtocol> protocol;
  NoiseModel noise;
  std::uint64_t trials = 0;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  double delta = 0.0;
};

Scenario scenario_from_json(const Json& j, const std::string& base_dir);

Json load_json_file(const std::string& path);

}  // namespace qvk
