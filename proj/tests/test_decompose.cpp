// Copyright 2026 The chandecomp authors
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

#include "chandecomp/decompose.hpp"

#include <algorithm>

#include <doctest.h>

#include "test_util.hpp"

using namespace chandecomp;

namespace {

struct Planted {
  QuantumChannel target;
  RealVector flat;
};

// Builds a target that is exactly a convex sum of `components` family channels
// and returns the generating flat vector.
Planted plant(AnsatzFamily family, Index n, Index m, int components, std::mt19937_64& gen) {
  const Index per = param_count(family, n, m);
  RealVector flat(components - 1 + components * per);
  std::uniform_real_distribution<double> simplex(0.6, 1.4);
  for (int i = 0; i + 1 < components; ++i) flat(i) = simplex(gen);
  for (int c = 0; c < components; ++c) {
    flat.segment(components - 1 + c * per, per) = test::random_params(family, n, m, gen);
  }
  const DecodedMixture mix = decode_mixture(family, n, m, components, flat);
  std::vector<QuantumChannel> parts;
  for (const auto& spec : mix.specs) parts.push_back(build(spec).channel);
  return {convex_combine(parts, mix.probs), flat};
}

}  // namespace

TEST_CASE("objective basics") {
  auto gen = test::rng(1001);
  const Planted planted = plant(AnsatzFamily::kI, 2, 2, 2, gen);
  DecompositionProblem problem{planted.target, AnsatzFamily::kI};
  CHECK(objective(problem, planted.flat) < 1e-12);

  // identity target, one component, zero parameters
  DecompositionProblem id_problem{QuantumChannel(2, 2, {ComplexMatrix::Identity(2, 2)}),
                                  AnsatzFamily::kI};
  id_problem.components = 1;
  CHECK(objective(id_problem, RealVector::Zero(11)) == doctest::Approx(0.0));

  for (int rep = 0; rep < 10; ++rep) {
    RealVector flat(flat_param_length(AnsatzFamily::kI, 2, 2, 2));
    for (Index i = 0; i < flat.size(); ++i) {
      flat(i) = std::normal_distribution<double>(0.0, 0.8)(gen);
    }
    const double v = objective(problem, flat);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
  }

  CHECK_THROWS_AS(objective(problem, RealVector::Zero(5)), std::invalid_argument);
}

TEST_CASE("planted qubit mixture is recovered") {
  auto gen = test::rng(1002);
  const Planted planted = plant(AnsatzFamily::kI, 2, 2, 2, gen);
  DecompositionProblem problem{planted.target, AnsatzFamily::kI};
  problem.starts = 20;
  problem.max_evals_per_start = 15000;
  problem.target_error = 1e-7;
  problem.seed = 42;
  const DecompositionResult result = decompose(problem);
  CHECK(result.achieved_error < 1e-6);
  CHECK(result.probs.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(result.probs.minCoeff() >= 0.0);

  // best-so-far bookkeeping never reports better than any individual start
  const double best_listed =
      *std::min_element(result.per_start_errors.begin(), result.per_start_errors.end());
  CHECK(result.achieved_error <= best_listed + 1e-12);
}

TEST_CASE("random full-rank qubit channel decomposes below 1e-3") {
  auto gen = test::rng(1003);
  DecompositionProblem problem{random_channel(2, 2, 4, gen), AnsatzFamily::kI};
  problem.starts = 20;
  problem.max_evals_per_start = 20000;
  problem.target_error = 1e-4;
  problem.seed = 7;
  const DecompositionResult result = decompose(problem);
  CHECK(result.achieved_error < 1e-3);

  // recomposed channel is CPTP regardless of optimizer state
  std::vector<QuantumChannel> parts;
  for (const auto& spec : result.specs) parts.push_back(build(spec).channel);
  const QuantumChannel recomposed = convex_combine(parts, result.probs);
  std::vector<ComplexMatrix> kraus = recomposed.kraus();
  CHECK(validate_cptp(kraus, 2, 2).accepted);
}

TEST_CASE("m components never lose to a single component") {
  auto gen = test::rng(1004);
  for (int rep = 0; rep < 3; ++rep) {
    const QuantumChannel target = random_channel(2, 2, 4, gen);
    DecompositionProblem one{target, AnsatzFamily::kI};
    one.components = 1;
    one.starts = 6;
    one.max_evals_per_start = 4000;
    one.target_error = 1e-9;
    one.seed = 99;
    DecompositionProblem many = one;
    many.components = 2;
    const double e1 = decompose(one).achieved_error;
    const double em = decompose(many).achieved_error;
    CHECK(em <= e1 + 1e-12);
  }
}

TEST_CASE("verify recomputes the stored error") {
  auto gen = test::rng(1005);
  const Planted planted = plant(AnsatzFamily::kIII, 2, 2, 2, gen);
  DecompositionProblem problem{planted.target, AnsatzFamily::kIII};
  problem.starts = 8;
  problem.max_evals_per_start = 6000;
  problem.target_error = 1e-6;
  problem.seed = 3;
  const DecompositionResult result = decompose(problem);

  const DistanceReport rep = verify(result, planted.target);
  CHECK(std::abs(rep.trace_distance - result.achieved_error) < 1e-12);
  CHECK(rep.diamond_upper_bound ==
        doctest::Approx(2.0 * 2.0 * rep.trace_distance).epsilon(1e-12));

  DecompositionResult broken = result;
  broken.probs(0) += 0.2;  // off the simplex
  CHECK_THROWS_AS(verify(broken, planted.target), std::domain_error);
}

TEST_CASE("budget exhaustion is flagged, not thrown") {
  auto gen = test::rng(1006);
  DecompositionProblem problem{random_channel(2, 2, 4, gen), AnsatzFamily::kI};
  problem.starts = 2;
  problem.max_evals_per_start = 300;
  problem.target_error = 1e-12;  // unreachable with this budget
  const DecompositionResult result = decompose(problem);
  CHECK(result.budget_exhausted);
  CHECK(result.per_start_errors.size() == 2);
  CHECK(result.achieved_error <= 1.0);
}

TEST_CASE("decompose argument checks") {
  auto gen = test::rng(1007);
  DecompositionProblem problem{random_channel(3, 4, 5, gen), AnsatzFamily::kI};
  CHECK_THROWS_AS(decompose(problem), capability_error);  // family I lacks (3,4)

  DecompositionProblem bad{random_channel(2, 2, 4, gen), AnsatzFamily::kI};
  bad.starts = 0;
  CHECK_THROWS_AS(decompose(bad), std::invalid_argument);
  bad.starts = 1;
  bad.target_error = 0.0;
  CHECK_THROWS_AS(decompose(bad), std::invalid_argument);
}

TEST_CASE("decompose is deterministic for a fixed seed and thread cap") {
  auto gen = test::rng(1008);
  const QuantumChannel target = random_channel(2, 2, 4, gen);
  auto run = [&] {
    DecompositionProblem problem{target, AnsatzFamily::kI};
    problem.starts = 4;
    problem.max_evals_per_start = 2000;
    problem.target_error = 1e-9;
    problem.seed = 1234;
    return decompose(problem);
  };
  const DecompositionResult a = run(), b = run();
  CHECK(a.achieved_error == b.achieved_error);
  REQUIRE(a.per_start_errors.size() == b.per_start_errors.size());
  for (size_t i = 0; i < a.per_start_errors.size(); ++i) {
    CHECK(a.per_start_errors[i] == b.per_start_errors[i]);
  }
}
