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

#include <cstdint>
#include <optional>
#include <vector>

#include "qvk/gate_protocol.hpp"
#include "qvk/state_verification.hpp"

namespace qvk {

/// Noise applied to the source (state runs) or to the process (gate
/// runs). A missing perturbation generator is drawn deterministically
/// from the run seed.
struct NoiseModel {
  enum class Kind {
    Ideal,
    DepolarizingState,
    DepolarizingChannel,
    UnitaryPerturbation,
    ChoiChannel
  };
  Kind kind = Kind::Ideal;
  double p = 0.0;         // depolarizing weight
  double strength = 0.0;  // perturbation angle scale
  std::optional<CMatrix> generator;  // Hermitian perturbation direction
  std::optional<CMatrix> choi;       // explicit CPTP map (gate runs only)
};

struct PerTestCount {
  std::uint64_t draws = 0;
  std::uint64_t passes = 0;
};

struct SimReport {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double empirical_pass_rate = 0.0;
  double analytic_bound = 0.0;  // exact per-trial pass probability
  std::vector<PerTestCount> per_test;
  std::uint64_t seed = 0;
};

/// Monte-Carlo run of a state-verification strategy: each trial draws a
/// test with its probability and a Bernoulli outcome with the exact pass
/// probability of the noisy source. Bit-reproducible for a fixed seed;
/// trials use independent substreams.
SimReport run_state_verification(const VerificationStrategy& strategy,
                                 const NoiseModel& source,
                                 std::uint64_t trials, std::uint64_t seed);

/// Monte-Carlo run of a gate protocol: draw a test state, push it through
/// the noisy channel, then run one randomly drawn setting of the output
/// strategy.
SimReport run_gate_verification(const GateProtocol& protocol,
                                const NoiseModel& channel,
                                std::uint64_t trials, std::uint64_t seed);

struct SampleComplexityReport {
  std::int64_t analytic_n = 0;
  double empirical_accept_rate = 0.0;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
};

/// Runs the analytic test count N against the worst-case eps-infidelity
/// source and reports the fraction of replicates that pass all N tests
/// (expected at most delta). source_eps < 0 reuses eps for the source.
SampleComplexityReport empirical_sample_complexity(
    const VerificationStrategy& strategy, double eps, double delta,
    std::uint64_t replicates, std::uint64_t seed, double source_eps = -1.0);

/// (1-eps)|target><target| + eps |beta><beta| with beta the second
/// eigenvector of omega: the maximizer of the average pass probability.
CMatrix worst_case_density(const VerificationStrategy& strategy, double eps);

}  // namespace qvk
