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

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "chandecomp/optimize.hpp"

namespace chandecomp {

namespace {

// Mixture Choi matrix straight from the flat vector, without constructing
// QuantumChannel objects (this sits in the optimizer's inner loop).
ComplexMatrix mixture_choi(AnsatzFamily family, Index n, Index m, int components,
                           const RealVector& flat) {
  const Index per = param_count(family, n, m);
  const Index d = n * m;

  RealVector weights(components);
  weights(0) = 1.0;
  for (int i = 1; i < components; ++i) weights(i) = flat(i - 1);
  const double wsum = weights.squaredNorm();

  ComplexMatrix choi = ComplexMatrix::Zero(d, d);
  ComplexVector v(d);
  for (int c = 0; c < components; ++c) {
    const double p = weights(c) * weights(c) / wsum;
    AnsatzSpec spec{family, n, m, flat.segment(components - 1 + c * per, per)};
    const GeneralizedExtremeChannel g = build(spec);
    for (const auto& k : g.channel.kraus()) {
      for (Index a = 0; a < m; ++a)
        for (Index i = 0; i < n; ++i) v(a * n + i) = k(a, i);
      choi.noalias() += (p / static_cast<double>(n)) * (v * v.adjoint());
    }
  }
  return choi;
}

double trace_norm_half(const ComplexMatrix& delta) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(delta, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

struct StartOutcome {
  RealVector x;
  double error = std::numeric_limits<double>::infinity();
  long evals = 0;
};

std::uint64_t mix_seed(std::uint64_t seed, int start) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(start + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RealVector random_init(AnsatzFamily family, Index n, Index m, int components,
                       std::mt19937_64& rng) {
  const Index per = param_count(family, n, m);
  const std::vector<ParamKind> kinds = param_kinds(family, n, m);
  RealVector x(components - 1 + components * per);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi / 2.0);
  std::normal_distribution<double> su(0.0, 0.5);
  std::normal_distribution<double> simplex(1.0, 0.5);
  for (int i = 0; i + 1 < components; ++i) x(i) = simplex(rng);
  Index pos = components - 1;
  for (int c = 0; c < components; ++c) {
    for (Index k = 0; k < per; ++k) {
      x(pos++) = kinds[static_cast<size_t>(k)] == ParamKind::kAngle ? angle(rng) : su(rng);
    }
  }
  return x;
}

StartOutcome run_start(const ComplexMatrix& target_choi, AnsatzFamily family, Index n, Index m,
                       int components, long budget, double f_target, std::uint64_t start_seed) {
  std::mt19937_64 rng(start_seed);
  const RealVector x0 = random_init(family, n, m, components, rng);

  long used = 0;
  auto dist_fn = [&](const RealVector& x) {
    return trace_norm_half(target_choi - mixture_choi(family, n, m, components, x));
  };
  auto frob_fn = [&](const RealVector& x) {
    return (target_choi - mixture_choi(family, n, m, components, x)).squaredNorm();
  };

  // Phase 1: simplex descent to find the basin.
  OptimOptions nm_opt;
  nm_opt.max_evals = std::max<long>(200, static_cast<long>(0.3 * static_cast<double>(budget)));
  nm_opt.f_target = f_target;
  nm_opt.f_tol = 1e-10;
  nm_opt.x_tol = 1e-8;
  RealVector step0 = RealVector::Constant(x0.size(), 0.25);
  OptimResult cur = nelder_mead(dist_fn, x0, step0, nm_opt);
  used += cur.evals;

  // Phase 2: quasi-Newton polish on the trace distance.
  OptimOptions qn_opt;
  qn_opt.max_evals = std::max<long>(0, static_cast<long>(0.45 * static_cast<double>(budget)));
  qn_opt.f_target = f_target;
  qn_opt.f_tol = 1e-14;
  qn_opt.fd_step = 1e-6;
  if (qn_opt.max_evals > 2 * x0.size() + 2) {
    OptimResult r = bfgs_fd(dist_fn, cur.x, qn_opt);
    used += r.evals;
    if (r.f < cur.f) cur = {r.x, r.f, 0};
  }

  // Phase 3: terminal polish on the smooth squared Frobenius surrogate, kept
  // only if it improves the true metric.
  if (cur.f < 5e-3 && budget - used > 2 * x0.size() + 2) {
    OptimOptions fr_opt;
    fr_opt.max_evals = budget - used;
    fr_opt.f_target = (f_target >= 0) ? f_target * f_target : -1.0;
    fr_opt.f_tol = 1e-16;
    fr_opt.fd_step = 1e-6;
    OptimResult r = bfgs_fd(frob_fn, cur.x, fr_opt);
    used += r.evals;
    const double dist = dist_fn(r.x);
    ++used;
    if (dist < cur.f) cur = {r.x, dist, 0};
  }

  return {cur.x, cur.f, used};
}

}  // namespace

int worker_thread_cap() {
  if (const char* env = std::getenv("CHANDECOMP_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

Index flat_param_length(AnsatzFamily family, Index n, Index m, int components) {
  if (components < 1) throw std::invalid_argument("flat_param_length: components must be >= 1");
  return components - 1 + components * param_count(family, n, m);
}

DecodedMixture decode_mixture(AnsatzFamily family, Index n, Index m, int components,
                              const RealVector& flat) {
  if (flat.size() != flat_param_length(family, n, m, components)) {
    throw std::invalid_argument("decode_mixture: wrong flat parameter length");
  }
  const Index per = param_count(family, n, m);
  RealVector weights(components);
  weights(0) = 1.0;
  for (int i = 1; i < components; ++i) weights(i) = flat(i - 1);
  DecodedMixture out;
  out.probs = weights.array().square() / weights.squaredNorm();
  for (int c = 0; c < components; ++c) {
    out.specs.push_back({family, n, m, flat.segment(components - 1 + c * per, per)});
  }
  return out;
}

double objective(const DecompositionProblem& problem, const RealVector& flat_params) {
  const Index n = problem.target.input_dim(), m = problem.target.output_dim();
  const int components = problem.effective_components();
  if (flat_params.size() != flat_param_length(problem.family, n, m, components)) {
    throw std::invalid_argument("objective: wrong flat parameter length");
  }
  const ChoiMatrix target = choi_from_kraus(problem.target);
  return trace_norm_half(target.matrix -
                         mixture_choi(problem.family, n, m, components, flat_params));
}

DecompositionResult decompose(const DecompositionProblem& problem) {
  const Index n = problem.target.input_dim(), m = problem.target.output_dim();
  const int components = problem.effective_components();
  if (!family_supports(problem.family, n, m)) {
    param_count(problem.family, n, m);  // throws the capability error
  }
  if (problem.starts < 1) throw std::invalid_argument("decompose: starts must be >= 1");
  if (problem.target_error <= 0) throw std::invalid_argument("decompose: target_error must be > 0");

  const ChoiMatrix target = choi_from_kraus(problem.target);
  const int threads = std::max(1, std::min(worker_thread_cap(), problem.starts));

  std::vector<StartOutcome> outcomes(static_cast<size_t>(problem.starts));
  int launched = 0;
  bool reached = false;
  while (launched < problem.starts && !reached) {
    const int batch = std::min(threads, problem.starts - launched);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(batch));
    for (int t = 0; t < batch; ++t) {
      const int idx = launched + t;
      pool.emplace_back([&, idx] {
        outcomes[static_cast<size_t>(idx)] =
            run_start(target.matrix, problem.family, n, m, components,
                      problem.max_evals_per_start, problem.target_error,
                      mix_seed(problem.seed, idx));
      });
    }
    for (auto& th : pool) th.join();
    launched += batch;
    for (int i = 0; i < launched; ++i) {
      if (outcomes[static_cast<size_t>(i)].error < problem.target_error) reached = true;
    }
  }

  int best = 0;
  for (int i = 1; i < launched; ++i) {
    if (outcomes[static_cast<size_t>(i)].error < outcomes[static_cast<size_t>(best)].error - 1e-15) {
      best = i;
    }
  }

  DecompositionResult result;
  for (int i = 0; i < launched; ++i) {
    result.per_start_errors.push_back(outcomes[static_cast<size_t>(i)].error);
    result.evals_used += outcomes[static_cast<size_t>(i)].evals;
  }

  RealVector best_x = outcomes[static_cast<size_t>(best)].x;

  if (problem.refine_components && components > 1) {
    // Optional pass: polish one component at a time, holding the others fixed.
    const Index per = param_count(problem.family, n, m);
    for (int c = 0; c < components; ++c) {
      const Index offset = components - 1 + c * per;
      auto sub_fn = [&](const RealVector& sub) {
        RealVector full = best_x;
        full.segment(offset, per) = sub;
        return trace_norm_half(target.matrix -
                               mixture_choi(problem.family, n, m, components, full));
      };
      OptimOptions opt;
      opt.max_evals = std::max<long>(500, problem.max_evals_per_start / (4 * components));
      opt.f_target = problem.target_error;
      opt.fd_step = 1e-6;
      OptimResult r = bfgs_fd(sub_fn, best_x.segment(offset, per), opt);
      result.evals_used += r.evals;
      RealVector candidate = best_x;
      candidate.segment(offset, per) = r.x;
      if (r.f < outcomes[static_cast<size_t>(best)].error) {
        best_x = candidate;
        outcomes[static_cast<size_t>(best)].error = r.f;
      }
    }
  }

  DecodedMixture mix = decode_mixture(problem.family, n, m, components, best_x);
  result.probs = std::move(mix.probs);
  result.specs = std::move(mix.specs);

  // Recompute the error independently of the optimizer's bookkeeping.
  std::vector<QuantumChannel> built;
  for (const auto& spec : result.specs) built.push_back(build(spec).channel);
  const QuantumChannel recomposed = convex_combine(built, result.probs);
  const DistanceReport rep = diamond_bound(target, choi_from_kraus(recomposed));
  result.achieved_error = rep.trace_distance;
  result.diamond_upper_bound = rep.diamond_upper_bound;
  result.budget_exhausted = result.achieved_error >= problem.target_error;
  return result;
}

DistanceReport verify(const DecompositionResult& result, const QuantumChannel& target) {
  if (result.specs.empty() || result.probs.size() != static_cast<Index>(result.specs.size())) {
    throw std::domain_error("verify: result has no components or mismatched probabilities");
  }
  if (result.probs.minCoeff() < -1e-12 || std::abs(result.probs.sum() - 1.0) > 1e-9) {
    throw std::domain_error("verify: probabilities are not a simplex point");
  }
  RealVector probs = result.probs.cwiseMax(0.0);
  probs /= probs.sum();
  std::vector<QuantumChannel> built;
  for (const auto& spec : result.specs) built.push_back(build(spec).channel);
  const QuantumChannel recomposed = convex_combine(built, probs);
  return diamond_bound(choi_from_kraus(target), choi_from_kraus(recomposed));
}

}  // namespace chandecomp
