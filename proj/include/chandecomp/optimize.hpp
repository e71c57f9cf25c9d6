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

#include <functional>

#include "chandecomp/types.hpp"

namespace chandecomp {

using ObjectiveFn = std::function<double(const RealVector&)>;

struct OptimOptions {
  long max_evals = 10000;
  double f_target = -1.0;   // stop as soon as f <= f_target (ignored if < 0)
  double f_tol = 1e-12;     // simplex spread / improvement tolerance
  double x_tol = 1e-10;
  double fd_step = 1e-6;    // central-difference step (bfgs_fd only)
};

struct OptimResult {
  RealVector x;
  double f = 0.0;
  long evals = 0;
};

/// Downhill simplex with adaptive restarts disabled; standard reflection /
/// expansion / contraction / shrink coefficients.
OptimResult nelder_mead(const ObjectiveFn& fn, const RealVector& x0, const RealVector& step0,
                        const OptimOptions& opt);

/// BFGS with central-difference gradients and Armijo backtracking. Tolerant of
/// mild nonsmoothness (resets the inverse Hessian when curvature degenerates).
OptimResult bfgs_fd(const ObjectiveFn& fn, const RealVector& x0, const OptimOptions& opt);

}  // namespace chandecomp
