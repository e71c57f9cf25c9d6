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

#include "chandecomp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace chandecomp {

OptimResult nelder_mead(const ObjectiveFn& fn, const RealVector& x0, const RealVector& step0,
                        const OptimOptions& opt) {
  const Index dim = x0.size();
  long evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return fn(x);
  };

  std::vector<RealVector> xs(static_cast<size_t>(dim) + 1, x0);
  std::vector<double> fs(static_cast<size_t>(dim) + 1);
  fs[0] = eval(xs[0]);
  for (Index i = 0; i < dim; ++i) {
    xs[static_cast<size_t>(i) + 1](i) += step0(i);
    fs[static_cast<size_t>(i) + 1] = eval(xs[static_cast<size_t>(i) + 1]);
  }
  std::vector<size_t> order(xs.size());

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  while (evals < opt.max_evals) {
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return fs[a] < fs[b]; });
    const size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];
    if (opt.f_target >= 0 && fs[best] <= opt.f_target) break;
    if (fs[worst] - fs[best] < opt.f_tol) break;

    double diam = 0.0;
    for (size_t i = 1; i < order.size(); ++i) {
      diam = std::max(diam, (xs[order[i]] - xs[best]).lpNorm<Eigen::Infinity>());
    }
    if (diam < opt.x_tol) break;

    RealVector centroid = RealVector::Zero(dim);
    for (size_t i = 0; i + 1 < order.size(); ++i) centroid += xs[order[i]];
    centroid /= static_cast<double>(dim);

    const RealVector xr = centroid + alpha * (centroid - xs[worst]);
    const double fr = eval(xr);
    if (fr < fs[best]) {
      const RealVector xe = centroid + gamma * (xr - centroid);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[worst] = xe;
        fs[worst] = fe;
      } else {
        xs[worst] = xr;
        fs[worst] = fr;
      }
    } else if (fr < fs[second]) {
      xs[worst] = xr;
      fs[worst] = fr;
    } else {
      const bool outside = fr < fs[worst];
      const RealVector xc = outside ? RealVector(centroid + rho * (xr - centroid))
                                    : RealVector(centroid - rho * (centroid - xs[worst]));
      const double fc = eval(xc);
      if (fc < std::min(fr, fs[worst])) {
        xs[worst] = xc;
        fs[worst] = fc;
      } else {
        for (size_t i = 1; i < order.size(); ++i) {
          const size_t k = order[i];
          xs[k] = xs[best] + sigma * (xs[k] - xs[best]);
          fs[k] = eval(xs[k]);
          if (evals >= opt.max_evals) break;
        }
      }
    }
  }

  size_t best = 0;
  for (size_t i = 1; i < fs.size(); ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  return {xs[best], fs[best], evals};
}

OptimResult bfgs_fd(const ObjectiveFn& fn, const RealVector& x0, const OptimOptions& opt) {
  const Index dim = x0.size();
  long evals = 0;
  auto eval = [&](const RealVector& x) {
    ++evals;
    return fn(x);
  };

  RealVector x = x0;
  double f = eval(x);
  RealVector best_x = x;
  double best_f = f;

  auto gradient = [&](const RealVector& at) {
    RealVector g(dim);
    RealVector probe = at;
    for (Index i = 0; i < dim; ++i) {
      const double h = opt.fd_step;
      probe(i) = at(i) + h;
      const double fp = eval(probe);
      probe(i) = at(i) - h;
      const double fm = eval(probe);
      probe(i) = at(i);
      g(i) = (fp - fm) / (2.0 * h);
    }
    return g;
  };

  RealMatrix hinv = RealMatrix::Identity(dim, dim);
  RealVector g = gradient(x);
  int stall = 0;

  while (evals + 2 * dim < opt.max_evals) {
    if (opt.f_target >= 0 && f <= opt.f_target) break;
    if (g.lpNorm<Eigen::Infinity>() < 1e-11) break;

    RealVector d = -(hinv * g);
    double slope = g.dot(d);
    if (!(slope < 0)) {  // reset on a non-descent direction
      hinv.setIdentity();
      d = -g;
      slope = g.dot(d);
      if (!(slope < 0)) break;
    }

    // Armijo backtracking
    double step = 1.0;
    double f_new = f;
    RealVector x_new = x;
    bool accepted = false;
    for (int ls = 0; ls < 28 && evals < opt.max_evals; ++ls) {
      x_new = x + step * d;
      f_new = eval(x_new);
      if (f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // Nonsmooth kink or noise floor: accept any strict improvement, else stop.
      if (f_new < f) {
        accepted = true;
      } else {
        break;
      }
    }

    const RealVector g_new = gradient(x_new);
    const RealVector s = x_new - x;
    const RealVector y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const RealVector hy = hinv * y;
      const double yhy = y.dot(hy);
      // BFGS inverse update
      hinv += ((sy + yhy) / (sy * sy)) * (s * s.transpose()) -
              (hy * s.transpose() + s * hy.transpose()) / sy;
    } else {
      hinv.setIdentity();
    }

    if (f - f_new < opt.f_tol * std::max(1.0, std::abs(f))) {
      if (++stall >= 3) {
        x = x_new;
        f = f_new;
        g = g_new;
        if (f < best_f) {
          best_f = f;
          best_x = x;
        }
        break;
      }
    } else {
      stall = 0;
    }
    x = x_new;
    f = f_new;
    g = g_new;
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }

  if (f < best_f) {
    best_f = f;
    best_x = x;
  }
  return {best_x, best_f, evals};
}

}  // namespace chandecomp
