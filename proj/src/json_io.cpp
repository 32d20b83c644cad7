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

#include "qvk/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace qvk {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end())
    throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

Json to_json(const CMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      data.push_back(complex_to_json(m(i, j)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

CMatrix matrix_from_json(const Json& j) {
  const auto rows = field(j, "rows").get<std::size_t>();
  const auto cols = field(j, "cols").get<std::size_t>();
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != rows * cols)
    throw SchemaError("matrix data length must equal rows*cols");
  CMatrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = complex_from_json(data[k++]);
  return m;
}

Json to_json(const CVector& v) {
  Json data = Json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) data.push_back(complex_to_json(v[i]));
  return Json{{"dim", v.dim()}, {"data", data}};
}

CVector vector_from_json(const Json& j) {
  const auto dim = field(j, "dim").get<std::size_t>();
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != dim)
    throw SchemaError("vector data length must equal dim");
  CVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = complex_from_json(data[i]);
  return v;
}

Json to_json(const BipartiteState& s) {
  return Json{{"vector", to_json(s.vector)},
              {"dim_a", s.dim_a},
              {"dim_b", s.dim_b}};
}

BipartiteState bipartite_from_json(const Json& j) {
  return {vector_from_json(field(j, "vector")),
          field(j, "dim_a").get<std::size_t>(),
          field(j, "dim_b").get<std::size_t>()};
}

Json to_json(const StateSet& s) {
  Json states = Json::array();
  for (const auto& v : s.states) states.push_back(to_json(v));
  Json j{{"states", states}};
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

StateSet state_set_from_json(const Json& j) {
  StateSet s;
  for (const Json& v : field(j, "states")) s.states.push_back(vector_from_json(v));
  if (j.contains("labels"))
    s.labels = j["labels"].get<std::vector<std::string>>();
  if (!s.labels.empty() && s.labels.size() != s.states.size())
    throw SchemaError("label count must match state count");
  return s;
}

Json to_json(const TransitionGraph& g) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j2 = i + 1; j2 < g.n; ++j2)
      if (g.adjacency[i][j2]) edges.push_back(Json::array({i, j2}));
  return Json{{"n", g.n},
              {"overlap_tolerance", g.overlap_tolerance},
              {"edges", edges}};
}

Json to_json(const MeasurementSetting& s) {
  Json pa = Json::array(), pb = Json::array(), pairs = Json::array();
  for (const auto& p : s.party_a) pa.push_back(to_json(p));
  for (const auto& p : s.party_b) pb.push_back(to_json(p));
  for (const auto& [a, b] : s.pass_pairs) pairs.push_back(Json::array({a, b}));
  return Json{{"party_a", pa}, {"party_b", pb}, {"pass_pairs", pairs}};
}

MeasurementSetting setting_from_json(const Json& j) {
  MeasurementSetting s;
  for (const Json& m : field(j, "party_a")) s.party_a.push_back(matrix_from_json(m));
  for (const Json& m : field(j, "party_b")) s.party_b.push_back(matrix_from_json(m));
  if (s.party_a.empty() || s.party_b.empty())
    throw SchemaError("each party needs at least one projector");
  for (const Json& p : field(j, "pass_pairs")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw SchemaError("pass pairs must be [a, b] index pairs");
    const int a = p[0].get<int>();
    const int b = p[1].get<int>();
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= s.party_a.size() ||
        static_cast<std::size_t>(b) >= s.party_b.size())
      throw SchemaError("pass pair indexes outside the projector lists");
    s.pass_pairs.emplace_back(a, b);
  }
  return s;
}

Json to_json(const TestOperator& op) {
  Json j{{"matrix", to_json(op.matrix)},
         {"realization", to_json(op.realization)}};
  if (op.input_state) j["input_state"] = to_json(*op.input_state);
  return j;
}

TestOperator test_operator_from_json(const Json& j) {
  TestOperator op;
  op.matrix = matrix_from_json(field(j, "matrix"));
  op.realization = setting_from_json(field(j, "realization"));
  if (j.contains("input_state"))
    op.input_state = bipartite_from_json(j["input_state"]);
  return op;
}

Json to_json(const VerificationStrategy& s) {
  Json tests = Json::array();
  for (const auto& [p, op] : s.tests)
    tests.push_back(Json{{"probability", p}, {"operator", to_json(op)}});
  return Json{{"target", to_json(s.target)},
              {"omega", to_json(s.omega)},
              {"nu", s.nu},
              {"tests", tests}};
}

VerificationStrategy strategy_from_json(const Json& j) {
  VerificationStrategy s;
  s.target = bipartite_from_json(field(j, "target"));
  s.omega = matrix_from_json(field(j, "omega"));
  s.nu = field(j, "nu").get<double>();
  for (const Json& t : field(j, "tests"))
    s.tests.push_back({field(t, "probability").get<double>(),
                       test_operator_from_json(field(t, "operator"))});
  s.validate();
  return s;
}

namespace {

const char* case_name(EfmisCase c) {
  switch (c) {
    case EfmisCase::Case1:
      return "pi4_wall";
    case EfmisCase::Case2:
      return "identity";
    case EfmisCase::Case3:
      return "generic";
    case EfmisCase::GateLibrary:
      return "gate_library";
  }
  return "unknown";
}

}  // namespace

Json to_json(const Efmis& e) {
  Json states = Json::array(), factors = Json::array();
  for (const auto& s : e.states) states.push_back(to_json(s));
  for (const auto& f : e.factors)
    factors.push_back(Json{{"input_a", to_json(f.input_a)},
                           {"input_b", to_json(f.input_b)},
                           {"output_a", to_json(f.output_a)},
                           {"output_b", to_json(f.output_b)}});
  Json report{{"input_concurrence", e.report.input_concurrence},
              {"output_concurrence", e.report.output_concurrence},
              {"rank", e.report.rank},
              {"connected", e.report.connected},
              {"pass", e.report.pass}};
  return Json{{"case", case_name(e.case_tag)},
              {"states", states},
              {"product_factors", factors},
              {"gram", to_json(e.gram)},
              {"target", to_json(e.target)},
              {"report", report}};
}

Json to_json(const GateProtocol& p) {
  Json tests = Json::array();
  for (const auto& t : p.tests)
    tests.push_back(Json{{"probability", t.probability},
                         {"input", to_json(t.input)},
                         {"strategy", to_json(t.strategy)},
                         {"setting_count", t.setting_count}});
  return Json{{"target", to_json(p.target)},
              {"mu", p.setting_count},
              {"classification",
               p.classification == RegionKind::SE ? "S_E" : "S_EF"},
              {"ordinary", p.ordinary},
              {"tests", tests}};
}

GateProtocol protocol_from_json(const Json& j) {
  GateProtocol p;
  p.target = matrix_from_json(field(j, "target"));
  p.setting_count = field(j, "mu").get<int>();
  const std::string cls = field(j, "classification").get<std::string>();
  if (cls == "S_E") {
    p.classification = RegionKind::SE;
  } else if (cls == "S_EF") {
    p.classification = RegionKind::SEF;
  } else {
    throw SchemaError("classification must be S_E or S_EF");
  }
  p.ordinary = field(j, "ordinary").get<bool>();
  for (const Json& t : field(j, "tests")) {
    GateTest test;
    test.probability = field(t, "probability").get<double>();
    test.input = vector_from_json(field(t, "input"));
    test.strategy = strategy_from_json(field(t, "strategy"));
    test.setting_count = field(t, "setting_count").get<int>();
    p.tests.push_back(std::move(test));
  }
  p.validate();
  return p;
}

Json to_json(const NoiseModel& n) {
  Json j;
  switch (n.kind) {
    case NoiseModel::Kind::Ideal:
      j["kind"] = "ideal";
      break;
    case NoiseModel::Kind::DepolarizingState:
      j["kind"] = "depolarizing_state";
      j["p"] = n.p;
      break;
    case NoiseModel::Kind::DepolarizingChannel:
      j["kind"] = "depolarizing_channel";
      j["p"] = n.p;
      break;
    case NoiseModel::Kind::UnitaryPerturbation:
      j["kind"] = "unitary_perturbation";
      j["strength"] = n.strength;
      break;
    case NoiseModel::Kind::ChoiChannel:
      j["kind"] = "choi";
      break;
  }
  if (n.generator) j["generator"] = to_json(*n.generator);
  if (n.choi) j["choi"] = to_json(*n.choi);
  return j;
}

NoiseModel noise_from_json(const Json& j) {
  NoiseModel n;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "ideal") {
    n.kind = NoiseModel::Kind::Ideal;
  } else if (kind == "depolarizing_state") {
    n.kind = NoiseModel::Kind::DepolarizingState;
    n.p = field(j, "p").get<double>();
  } else if (kind == "depolarizing_channel") {
    n.kind = NoiseModel::Kind::DepolarizingChannel;
    n.p = field(j, "p").get<double>();
  } else if (kind == "unitary_perturbation") {
    n.kind = NoiseModel::Kind::UnitaryPerturbation;
    n.strength = field(j, "strength").get<double>();
  } else if (kind == "choi") {
    n.kind = NoiseModel::Kind::ChoiChannel;
    n.choi = matrix_from_json(field(j, "choi"));
  } else {
    throw SchemaError("unknown noise kind '" + kind + "'");
  }
  if (j.contains("generator")) n.generator = matrix_from_json(j["generator"]);
  return n;
}

Json to_json(const SimReport& r) {
  Json per_test = Json::array();
  for (const auto& t : r.per_test)
    per_test.push_back(Json{{"draws", t.draws}, {"passes", t.passes}});
  return Json{{"trials", r.trials},
              {"passes", r.passes},
              {"empirical_pass_rate", r.empirical_pass_rate},
              {"analytic_bound", r.analytic_bound},
              {"per_test", per_test},
              {"seed", r.seed}};
}

Json to_json(const SampleComplexityReport& r) {
  return Json{{"analytic_n", r.analytic_n},
              {"empirical_accept_rate", r.empirical_accept_rate},
              {"replicates", r.replicates},
              {"seed", r.seed}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw SchemaError("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

namespace {

// inline object or {"file": relative-path}
Json resolve_ref(const Json& j, const std::string& base_dir) {
  if (j.is_object() && j.contains("file")) {
    const std::filesystem::path p =
        std::filesystem::path(base_dir) / j["file"].get<std::string>();
    return load_json_file(p.string());
  }
  return j;
}

}  // namespace

Scenario scenario_from_json(const Json& j, const std::string& base_dir) {
  Scenario s;
  const std::string kind = field(j, "kind").get<std::string>();
  try {
    if (kind == "state") {
      s.kind = Scenario::Kind::State;
      s.strategy = strategy_from_json(resolve_ref(field(j, "strategy"), base_dir));
      s.trials = field(j, "trials").get<std::uint64_t>();
    } else if (kind == "gate") {
      s.kind = Scenario::Kind::Gate;
      s.protocol = protocol_from_json(resolve_ref(field(j, "protocol"), base_dir));
      s.trials = field(j, "trials").get<std::uint64_t>();
    } else if (kind == "sample_complexity") {
      s.kind = Scenario::Kind::SampleComplexity;
      s.strategy = strategy_from_json(resolve_ref(field(j, "strategy"), base_dir));
      s.replicates = field(j, "replicates").get<std::uint64_t>();
      s.eps = field(j, "eps").get<double>();
      s.delta = field(j, "delta").get<double>();
    } else {
      throw SchemaError("scenario kind must be state, gate or sample_complexity");
    }
    if (j.contains("noise")) s.noise = noise_from_json(j["noise"]);
    s.seed = field(j, "seed").get<std::uint64_t>();
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed scenario: ") + e.what());
  } catch (const Error& e) {
    throw SchemaError(std::string("scenario rejected: ") + e.what());
  }
  return s;
}

}  // namespace qvk
