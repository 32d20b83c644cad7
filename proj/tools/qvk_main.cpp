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

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qvk/canonical_form.hpp"
#include "qvk/gate_protocol.hpp"
#include "qvk/json_io.hpp"
#include "qvk/product_geometry.hpp"
#include "qvk/simulator.hpp"
#include "qvk/state_verification.hpp"

namespace {

using namespace qvk;

constexpr int kExitUsage = 2;
constexpr int kExitNotUnitary = 3;
constexpr int kExitSynthesis = 4;
constexpr int kExitScenario = 5;

std::vector<double> parse_csv_doubles(const std::string& text, std::size_t n,
                                      const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.size() != n)
    throw Error(std::string(what) + " needs exactly " + std::to_string(n) +
                " comma-separated values");
  return out;
}

// CLI angles arrive in units of pi
CanonicalAngles parse_angles(const std::string& text) {
  const auto v = parse_csv_doubles(text, 3, "--angles");
  return {v[0] * kPi, v[1] * kPi, v[2] * kPi};
}

GateSpec parse_gate(const std::string& name, double phi_pi) {
  std::string upper;
  for (char c : name)
    upper.push_back(
        static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "CNOT") return {GateKind::Cnot};
  if (upper == "CZ") return {GateKind::Cz};
  if (upper == "SWAP") return {GateKind::Swap};
  if (upper == "CPHASE") {
    if (phi_pi <= 0.0)
      throw Error("--gate CPHASE needs --phi (units of pi, in (0,2))");
    return {GateKind::CPhase, phi_pi * kPi};
  }
  throw Error("unknown gate '" + name + "' (CNOT, CZ, CPHASE, SWAP)");
}

void emit(const Json& j, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error("cannot write '" + out_file + "'");
    out << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error("cannot write '" + out_file + "'");
    out << text;
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_analyze(const std::string& unitary_file, const std::string& angles_text,
                const std::string& gate_name, double phi_pi, int samples,
                std::uint64_t seed, const std::string& out_file) {
  CMatrix u;
  Json source;
  std::optional<CanonicalAngles> given_angles;
  if (!unitary_file.empty()) {
    u = matrix_from_json(load_json_file(unitary_file));
    source = Json{{"unitary", unitary_file}};
  } else if (!angles_text.empty()) {
    const CanonicalAngles a = parse_angles(angles_text);
    given_angles = a;
    u = build_canonical(a);
    source = Json{{"angles_pi", parse_csv_doubles(angles_text, 3, "--angles")}};
  } else {
    const GateSpec g = parse_gate(gate_name, phi_pi);
    u = gate_matrix(g);
    source = Json{{"gate", gate_name}};
  }

  const SchmidtSpectrum4 spec = operator_schmidt_spectrum(u);
  Json recovery;
  try {
    const AngleRecovery rec = recover_angles(spec);
    if (rec.kind == AngleRecovery::Kind::Unique) {
      recovery = Json{{"kind", "unique"},
                      {"angles_pi", {rec.angles.a1 / kPi, rec.angles.a2 / kPi,
                                     rec.angles.a3 / kPi}}};
    } else {
      recovery = Json{{"kind", "degenerate_family"},
                      {"family_product", rec.family_product},
                      {"representative_angles_pi",
                       {rec.angles.a1 / kPi, rec.angles.a2 / kPi,
                        rec.angles.a3 / kPi}}};
    }
  } catch (const InfeasibleSpectrum& e) {
    recovery = Json{{"kind", "infeasible"}, {"detail", e.what()}};
  }

  const RegionKind region = given_angles
                                ? classify_region(given_angles->a1,
                                                  given_angles->a2,
                                                  given_angles->a3)
                                      .tag
                                : classify_by_spectrum(u);

  Json out{{"input", source},
           {"spectrum", {spec.s[0], spec.s[1], spec.s[2], spec.s[3]}},
           {"schmidt_rank", schmidt_rank(u)},
           {"angle_recovery", recovery},
           {"region", region == RegionKind::SE ? "S_E" : "S_EF"},
           {"mu", mu(u)},
           {"d_prod", d_prod_estimate(u, samples, seed)}};
  emit(out, out_file);
  return 0;
}

int cmd_verify_state(const std::string& state_file, const std::string& dims,
                     double eps, double delta, const std::string& out_file) {
  const auto d = parse_csv_doubles(dims, 2, "--dims");
  const auto da = static_cast<std::size_t>(d[0]);
  const auto db = static_cast<std::size_t>(d[1]);
  const CVector psi = vector_from_json(load_json_file(state_file));
  const BipartiteState state(psi, da, db);
  const VerificationStrategy strategy = two_setting_protocol(state);

  Json out{{"strategy", to_json(strategy)},
           {"nu", strategy.nu},
           {"settings", strategy.tests.size()}};
  if (eps > 0.0 && delta > 0.0)
    out["sample_count"] = sample_count(strategy.nu, eps, delta);
  emit(out, out_file);
  return 0;
}

int cmd_synthesize(const std::string& angles_text, const std::string& gate_name,
                   double phi_pi, const std::string& out_file) {
  GateProtocol protocol;
  if (!gate_name.empty()) {
    protocol = build_protocol(parse_gate(gate_name, phi_pi));
  } else {
    const CanonicalAngles a = parse_angles(angles_text);
    if (!a.in_canonical_cell(1e-12))
      throw Error(
          "--angles must lie in the canonical cell 0 <= a3 <= a2 <= a1 <= "
          "0.25 (units of pi); run analyze to obtain the reduced "
          "representative");
    protocol = build_protocol(a);
  }
  emit(to_json(protocol), out_file);
  return 0;
}

int cmd_region(const std::string& mode, double zeta0, int grid,
               const std::string& out_file) {
  if (grid < 2) throw Error("--grid must be at least 2");
  std::string csv;
  if (mode == "contour") {
    csv = "alpha2_pi,alpha3_pi,zeta0_sq\n";
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const double a2 = (kPi / 4.0) * i / (grid - 1);
        const double a3 = (kPi / 4.0) * j / (grid - 1);
        const auto z = zeta({kPi / 4.0, a2, a3});
        csv += fmt(a2 / kPi) + "," + fmt(a3 / kPi) + "," +
               fmt(std::norm(z[0])) + "\n";
      }
    }
  } else if (mode == "ternary") {
    if (!(zeta0 > 0.5 && zeta0 < 1.0))
      throw Error("--zeta0 must lie in (0.5, 1)");
    csv = "xi1,xi2,xi3\n";
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double a2 = (kPi / 4.0) * i / (grid - 1);
        const double a3 = (kPi / 4.0) * j / (grid - 1);
        // |zeta_0| decreases in a1 on the cell; bisect for the target value
        auto z0 = [&](double a1) { return std::abs(zeta({a1, a2, a3})[0]); };
        double lo = a2, hi = kPi / 4.0;
        if (z0(lo) < zeta0 || z0(hi) > zeta0) continue;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          (z0(mid) >= zeta0 ? lo : hi) = mid;
        }
        const double a1 = 0.5 * (lo + hi);
        RegionSample s;
        try {
          s = region_sample({a1, a2, a3});
        } catch (const ProductUnitary&) {
          continue;
        }
        // accessibility filter: the spectrum must invert to cell angles
        SchmidtSpectrum4 spec;
        spec.s = {std::sqrt(s.zeta0_sq),
                  std::sqrt(s.xi[0] * (1.0 - s.zeta0_sq)),
                  std::sqrt(s.xi[1] * (1.0 - s.zeta0_sq)),
                  std::sqrt(s.xi[2] * (1.0 - s.zeta0_sq))};
        std::sort(spec.s.begin(), spec.s.end(), std::greater<double>());
        try {
          recover_angles(spec);
        } catch (const InfeasibleSpectrum&) {
          continue;
        }
        // the full angle range reaches every permutation of the cross
        // section, so emit all of them
        const std::array<std::array<int, 3>, 6> perms = {
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
          csv += fmt(s.xi[static_cast<std::size_t>(p[0])]) + "," +
                 fmt(s.xi[static_cast<std::size_t>(p[1])]) + "," +
                 fmt(s.xi[static_cast<std::size_t>(p[2])]) + "\n";
        }
      }
    }
  } else {
    throw Error("--mode must be contour or ternary");
  }
  emit_text(csv, out_file);
  return 0;
}

int cmd_simulate(const std::string& scenario_file, const std::string& out_file) {
  const Json doc = load_json_file(scenario_file);
  const std::string base_dir =
      std::filesystem::path(scenario_file).parent_path().string();
  Scenario scenario = scenario_from_json(doc, base_dir.empty() ? "." : base_dir);

  if (const char* env = std::getenv("QVK_SEED")) {
    scenario.seed = std::strtoull(env, nullptr, 10);
  }

  Json out;
  switch (scenario.kind) {
    case Scenario::Kind::State:
      out = to_json(run_state_verification(*scenario.strategy, scenario.noise,
                                           scenario.trials, scenario.seed));
      break;
    case Scenario::Kind::Gate:
      out = to_json(run_gate_verification(*scenario.protocol, scenario.noise,
                                          scenario.trials, scenario.seed));
      break;
    case Scenario::Kind::SampleComplexity:
      out = to_json(empirical_sample_complexity(
          *scenario.strategy, scenario.eps, scenario.delta,
          scenario.replicates, scenario.seed));
      break;
  }
  emit(out, out_file);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qvk: minimal-setting verification of bipartite states and "
               "two-qubit unitaries"};
  app.require_subcommand(1);

  std::string unitary_file, angles_text, gate_name, out_file;
  double phi_pi = 0.0;
  int samples = 200;
  std::uint64_t seed = 1;

  auto* analyze = app.add_subcommand(
      "analyze", "Schmidt spectrum, canonical angles, region and setting count");
  auto* opt_u = analyze->add_option("--unitary", unitary_file,
                                    "4x4 unitary as a JSON matrix file");
  auto* opt_a = analyze->add_option(
      "--angles", angles_text, "canonical angles a1,a2,a3 in units of pi");
  auto* opt_g =
      analyze->add_option("--gate", gate_name, "CNOT | CZ | CPHASE | SWAP");
  analyze->add_option("--phi", phi_pi, "C-Phase phase in units of pi");
  analyze->add_option("--samples", samples, "product-span sample budget");
  analyze->add_option("--seed", seed, "sampling seed");
  analyze->add_option("--out", out_file, "write JSON here instead of stdout");
  opt_u->excludes(opt_a)->excludes(opt_g);
  opt_a->excludes(opt_g);

  std::string state_file, dims;
  double eps = 0.0, delta = 0.0;
  auto* verify = app.add_subcommand(
      "verify-state", "two-setting verification strategy for a pure state");
  verify->add_option("--state", state_file, "state vector JSON file")
      ->required();
  verify->add_option("--dims", dims, "local dimensions dA,dB")->required();
  verify->add_option("--eps", eps, "infidelity threshold");
  verify->add_option("--delta", delta, "significance level");
  verify->add_option("--out", out_file, "write JSON here instead of stdout");

  auto* synth = app.add_subcommand(
      "synthesize", "minimal-setting gate-verification protocol");
  auto* sopt_a = synth->add_option("--angles", angles_text,
                                   "canonical-cell angles in units of pi");
  auto* sopt_g =
      synth->add_option("--gate", gate_name, "CNOT | CZ | CPHASE | SWAP");
  synth->add_option("--phi", phi_pi, "C-Phase phase in units of pi");
  synth->add_option("--out", out_file, "write JSON here instead of stdout");
  sopt_a->excludes(sopt_g);

  std::string mode;
  double zeta0 = 0.0;
  int grid = 0;
  auto* region = app.add_subcommand(
      "region", "CSV datasets of the accessible Schmidt-coefficient region");
  region->add_option("--mode", mode, "contour | ternary")->required();
  region->add_option("--zeta0", zeta0, "largest coefficient (ternary mode)");
  region->add_option("--grid", grid, "grid resolution")->required();
  region->add_option("--out", out_file, "write CSV here instead of stdout");

  std::string scenario_file;
  auto* simulate =
      app.add_subcommand("simulate", "seeded Monte-Carlo run of a scenario");
  simulate->add_option("--scenario", scenario_file, "scenario JSON file")
      ->required();
  simulate->add_option("--out", out_file, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      if (unitary_file.empty() && angles_text.empty() && gate_name.empty())
        throw Error("analyze needs one of --unitary, --angles, --gate");
      return cmd_analyze(unitary_file, angles_text, gate_name, phi_pi, samples,
                         seed, out_file);
    }
    if (verify->parsed())
      return cmd_verify_state(state_file, dims, eps, delta, out_file);
    if (synth->parsed()) {
      if (angles_text.empty() && gate_name.empty())
        throw Error("synthesize needs one of --angles, --gate");
      return cmd_synthesize(angles_text, gate_name, phi_pi, out_file);
    }
    if (region->parsed()) return cmd_region(mode, zeta0, grid, out_file);
    if (simulate->parsed()) return cmd_simulate(scenario_file, out_file);
  } catch (const NotUnitary& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotUnitary;
  } catch (const SynthesisFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSynthesis;
  } catch (const SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScenario;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
