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

#include <random>

#include "chandecomp/ansatz.hpp"
#include "chandecomp/channel.hpp"
#include "chandecomp/types.hpp"

namespace chandecomp::test {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double unitarity_defect(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols())).norm();
}

inline RealVector random_params(AnsatzFamily family, Index n, Index m, std::mt19937_64& gen) {
  const Index count = param_count(family, n, m);
  const auto kinds = param_kinds(family, n, m);
  std::uniform_real_distribution<double> angle(0.0, 1.5707963267948966);
  std::normal_distribution<double> su(0.0, 0.5);
  RealVector p(count);
  for (Index k = 0; k < count; ++k) {
    p(k) = kinds[static_cast<size_t>(k)] == ParamKind::kAngle ? angle(gen) : su(gen);
  }
  return p;
}

inline double tp_residual(const QuantumChannel& ch) {
  ComplexMatrix acc = ComplexMatrix::Zero(ch.input_dim(), ch.input_dim());
  for (const auto& k : ch.kraus()) acc += k.adjoint() * k;
  return (acc - ComplexMatrix::Identity(ch.input_dim(), ch.input_dim())).norm();
}

inline const std::vector<std::pair<Index, Index>>& family_i_shapes() {
  static const std::vector<std::pair<Index, Index>> shapes = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {4, 4}};
  return shapes;
}

inline const std::vector<std::pair<Index, Index>>& all_shapes() {
  static const std::vector<std::pair<Index, Index>> shapes = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}, {4, 4}, {3, 4}, {4, 3}};
  return shapes;
}

}  // namespace chandecomp::test
