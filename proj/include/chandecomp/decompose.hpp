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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chandecomp/ansatz.hpp"
#include "chandecomp/metrics.hpp"

namespace chandecomp {

/// Approximation of a target channel by a convex sum of generalized extreme
/// channels, found by multi-start local optimization of the Choi trace
/// distance. Starts run independently (optionally in parallel); the stream of
/// random initial points is seeded per start, so results do not depend on
/// completion order.
struct DecompositionProblem {
  QuantumChannel target;
  AnsatzFamily family = AnsatzFamily::kI;
  int components = 0;  // 0 means the default, m
  int starts = 20;
  long max_evals_per_start = 50000;
  double target_error = 1e-5;
  std::uint64_t seed = 0;
  bool refine_components = false;  // extra per-component coordinate refinement

  int effective_components() const {
    return components > 0 ? components : static_cast<int>(target.output_dim());
  }
};

struct DecompositionResult {
  RealVector probs;
  std::vector<AnsatzSpec> specs;
  double achieved_error = 0.0;        // Choi trace distance, recomputed from specs
  double diamond_upper_bound = 0.0;
  long evals_used = 0;
  std::vector<double> per_start_errors;
  bool budget_exhausted = false;      // target_error not reached within budget
};

/// Flat layout: [components-1 raw simplex coordinates | per-component
/// parameter blocks]. Probabilities decode as p_i = x_i^2 / sum_j x_j^2 with
/// x_0 fixed to 1.
Index flat_param_length(AnsatzFamily family, Index n, Index m, int components);

/// Choi trace distance between the target and the decoded convex mixture.
double objective(const DecompositionProblem& problem, const RealVector& flat_params);

DecompositionResult decompose(const DecompositionProblem& problem);

/// Rebuilds every component from the serialized specs, recomposes and
/// recomputes both metrics from scratch. Throws std::domain_error if the
/// stored probabilities are not a simplex point.
DistanceReport verify(const DecompositionResult& result, const QuantumChannel& target);

/// Decoded view of a flat parameter vector (exposed for tests and the CLI).
struct DecodedMixture {
  RealVector probs;
  std::vector<AnsatzSpec> specs;
};
DecodedMixture decode_mixture(AnsatzFamily family, Index n, Index m, int components,
                              const RealVector& flat_params);

/// Worker-thread cap: CHANDECOMP_THREADS if set and positive, otherwise the
/// hardware concurrency.
int worker_thread_cap();

}  // namespace chandecomp
