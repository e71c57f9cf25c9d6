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

#include "chandecomp/channel.hpp"
#include "chandecomp/types.hpp"

namespace chandecomp {

struct DistanceReport {
  double trace_distance = 0.0;
  double diamond_upper_bound = 0.0;  // 2 * n * trace_distance
  Index n = 0;                       // input dimension entering the bound
};

/// (1/2) sum |lambda_k| over the (real) spectrum of a - b, computed with a
/// Hermitian eigensolver.
double trace_distance(const ChoiMatrix& a, const ChoiMatrix& b);

/// Trace distance together with the diamond-norm upper bound 2n * D_t.
DistanceReport diamond_bound(const ChoiMatrix& a, const ChoiMatrix& b);

}  // namespace chandecomp
