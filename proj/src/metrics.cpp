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

#include "chandecomp/metrics.hpp"

#include <cmath>

namespace chandecomp {

double trace_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.n != b.n || a.m != b.m) {
    throw std::invalid_argument("trace_distance: Choi matrices have different (n, m)");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix - b.matrix, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

DistanceReport diamond_bound(const ChoiMatrix& a, const ChoiMatrix& b) {
  const double td = trace_distance(a, b);
  return {td, 2.0 * static_cast<double>(a.n) * td, a.n};
}

}  // namespace chandecomp
