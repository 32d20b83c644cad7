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

#include "qvk/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "qvk/rng.hpp"

namespace qvk {

namespace {

constexpr std::uint64_t kGeneratorStream = 0x9e37;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

CMatrix perturbation_generator(const NoiseModel& model, std::size_t dim,
                               std::uint64_t seed) {
  if (model.generator) {
    if (!model.generator->is_hermitian(1e-10))
      throw NotHermitian("perturbation generator must be Hermitian");
    return *model.generator;
  }
  CounterRng rng(seed, kGeneratorStream);
  return random_hermitian(dim, rng);
}

CMatrix source_density(const VerificationStrategy& strategy,
                       const NoiseModel& source, std::uint64_t seed) {
  const CVector& psi = strategy.target.vector;
  const std::size_t d = psi.dim();
  switch (source.kind) {
    case NoiseModel::Kind::Ideal:
      return outer(psi, psi);
    case NoiseModel::Kind::DepolarizingState: {
      if (source.p < 0.0 || source.p > 1.0)
        throw Error("depolarizing weight must be in [0,1]");
      CMatrix rho = outer(psi, psi);
      rho *= Complex{1.0 - source.p, 0.0};
      for (std::size_t i = 0; i < d; ++i)
        rho(i, i) += source.p / static_cast<double>(d);
      return rho;
    }
    case NoiseModel::Kind::UnitaryPerturbation: {
      CMatrix g = perturbation_generator(source, d, seed);
      g *= Complex{source.strength, 0.0};
      const CVector phi = hermitian_exp_minus_i(g).apply(psi);
      return outer(phi, phi);
    }
    case NoiseModel::Kind::DepolarizingChannel:
    case NoiseModel::Kind::ChoiChannel:
      throw Error("channel noise does not describe a state source");
  }
  throw Error("unknown noise kind");
}

QuantumChannel process_channel(const GateProtocol& protocol,
                               const NoiseModel& noise, std::uint64_t seed) {
  switch (noise.kind) {
    case NoiseModel::Kind::Ideal:
      return QuantumChannel::from_unitary(protocol.target);
    case NoiseModel::Kind::DepolarizingChannel:
      return QuantumChannel::depolarizing(protocol.target, noise.p);
    case NoiseModel::Kind::UnitaryPerturbation: {
      CMatrix g =
          perturbation_generator(noise, protocol.target.rows(), seed);
      g *= Complex{noise.strength, 0.0};
      return QuantumChannel::from_unitary(hermitian_exp_minus_i(g) *
                                          protocol.target);
    }
    case NoiseModel::Kind::ChoiChannel:
      if (!noise.choi) throw Error("Choi-channel noise needs its matrix");
      return QuantumChannel::from_choi(*noise.choi);
    case NoiseModel::Kind::DepolarizingState:
      throw Error("state noise does not describe a process");
  }
  throw Error("unknown noise kind");
}

// one trial against precomputed test probabilities and pass probabilities
template <typename PickPass>
SimReport run_trials(const std::vector<double>& test_probs,
                     PickPass&& pass_prob_of, std::uint64_t trials,
                     std::uint64_t seed) {
  SimReport report;
  report.trials = trials;
  report.seed = seed;
  report.per_test.assign(test_probs.size(), {});
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    const double pick = rng.uniform();
    std::size_t l = 0;
    double acc = 0.0;
    for (; l + 1 < test_probs.size(); ++l) {
      acc += test_probs[l];
      if (pick < acc) break;
    }
    ++report.per_test[l].draws;
    if (rng.uniform() < pass_prob_of(l, rng)) {
      ++report.per_test[l].passes;
      ++report.passes;
    }
  }
  report.empirical_pass_rate =
      trials == 0 ? 0.0 : static_cast<double>(report.passes) / trials;
  return report;
}

}  // namespace

SimReport run_state_verification(const VerificationStrategy& strategy,
                                 const NoiseModel& source,
                                 std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error("at least one trial is required");
  const CMatrix rho = source_density(strategy, source, seed);
  std::vector<double> test_probs;
  std::vector<double> pass_probs;
  for (const auto& [p, op] : strategy.tests) {
    test_probs.push_back(p);
    pass_probs.push_back(clamp01((op.matrix * rho).trace().real()));
  }
  SimReport report = run_trials(
      test_probs,
      [&](std::size_t l, CounterRng&) { return pass_probs[l]; }, trials, seed);
  report.analytic_bound = (strategy.omega * rho).trace().real();
  return report;
}

SimReport run_gate_verification(const GateProtocol& protocol,
                                const NoiseModel& noise, std::uint64_t trials,
                                std::uint64_t seed) {
  if (trials == 0) throw Error("at least one trial is required");
  const QuantumChannel channel = process_channel(protocol, noise, seed);

  std::vector<double> test_probs;
  std::vector<std::vector<double>> setting_probs;   // cumulative
  std::vector<std::vector<double>> setting_passes;  // tr(E_l sigma_j)
  for (const auto& test : protocol.tests) {
    test_probs.push_back(test.probability);
    const CMatrix sigma = channel.apply(outer(test.input, test.input));
    std::vector<double> cumulative;
    std::vector<double> passes;
    double acc = 0.0;
    for (const auto& [p, op] : test.strategy.tests) {
      acc += p;
      cumulative.push_back(acc);
      passes.push_back(clamp01((op.matrix * sigma).trace().real()));
    }
    setting_probs.push_back(std::move(cumulative));
    setting_passes.push_back(std::move(passes));
  }

  SimReport report = run_trials(
      test_probs,
      [&](std::size_t j, CounterRng& rng) {
        const double pick = rng.uniform();
        std::size_t l = 0;
        while (l + 1 < setting_probs[j].size() && pick >= setting_probs[j][l])
          ++l;
        return setting_passes[j][l];
      },
      trials, seed);
  report.analytic_bound = pass_probability(protocol, channel);
  return report;
}

CMatrix worst_case_density(const VerificationStrategy& strategy, double eps) {
  if (eps < 0.0 || eps > 1.0) throw Error("eps must lie in [0,1]");
  const EigResult eig = hermitian_eig(strategy.omega);
  const CVector& psi = strategy.target.vector;
  const CVector beta = eig.vectors.column(1);
  CMatrix rho = outer(psi, psi);
  rho *= Complex{1.0 - eps, 0.0};
  CMatrix tail = outer(beta, beta);
  tail *= Complex{eps, 0.0};
  return rho + tail;
}

SampleComplexityReport empirical_sample_complexity(
    const VerificationStrategy& strategy, double eps, double delta,
    std::uint64_t replicates, std::uint64_t seed, double source_eps) {
  if (replicates == 0) throw Error("at least one replicate is required");
  SampleComplexityReport report;
  report.analytic_n = sample_count(strategy.nu, eps, delta);
  report.replicates = replicates;
  report.seed = seed;

  const double actual = source_eps < 0.0 ? eps : source_eps;
  const CMatrix rho = worst_case_density(strategy, actual);
  std::vector<double> test_probs;
  std::vector<double> pass_probs;
  for (const auto& [p, op] : strategy.tests) {
    test_probs.push_back(p);
    pass_probs.push_back(clamp01((op.matrix * rho).trace().real()));
  }

  std::uint64_t accepted = 0;
  for (std::uint64_t r = 0; r < replicates; ++r) {
    CounterRng rng(seed, r);
    bool all_pass = true;
    for (std::int64_t n = 0; n < report.analytic_n && all_pass; ++n) {
      const double pick = rng.uniform();
      std::size_t l = 0;
      double acc = 0.0;
      for (; l + 1 < test_probs.size(); ++l) {
        acc += test_probs[l];
        if (pick < acc) break;
      }
      all_pass = rng.uniform() < pass_probs[l];
    }
    if (all_pass) ++accepted;
  }
  report.empirical_accept_rate =
      static_cast<double>(accepted) / static_cast<double>(replicates);
  return report;
}

}  // namespace qvk
