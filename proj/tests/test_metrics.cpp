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

#include <doctest.h>

#include "chandecomp/matgen.hpp"
#include "test_util.hpp"

using namespace chandecomp;

namespace {

ChoiMatrix random_choi(Index n, Index m, Index rank, std::mt19937_64& gen) {
  return choi_from_kraus(random_channel(n, m, rank, gen));
}

}  // namespace

TEST_CASE("trace distance values") {
  auto gen = test::rng(5);
  const ChoiMatrix a = random_choi(2, 3, 4, gen);
  CHECK(trace_distance(a, a) == doctest::Approx(0.0));

  // identity channel vs fully mixing channel: spectrum {3/4, -1/4, -1/4, -1/4}
  const ChoiMatrix id2 = choi_from_kraus(QuantumChannel(2, 2, {ComplexMatrix::Identity(2, 2)}));
  ChoiMatrix mixed{2, 2, ComplexMatrix::Identity(4, 4) / 4.0};
  CHECK(trace_distance(id2, mixed) == doctest::Approx(0.75).epsilon(1e-12));

  // cross-check against the singular-value route on random pairs
  for (int rep = 0; rep < 20; ++rep) {
    const ChoiMatrix x = random_choi(2, 2, 1 + rep % 4, gen);
    const ChoiMatrix y = random_choi(2, 2, 1 + (rep + 1) % 4, gen);
    const double dt = trace_distance(x, y);
    CHECK(dt >= 0.0);
    CHECK(dt <= 1.0 + 1e-12);
    Eigen::JacobiSVD<ComplexMatrix> svd(x.matrix - y.matrix);
    CHECK(dt == doctest::Approx(0.5 * svd.singularValues().sum()).epsilon(1e-10));
  }

  const ChoiMatrix b = random_choi(3, 2, 2, gen);
  CHECK_THROWS_AS(trace_distance(a, b), std::invalid_argument);
}

TEST_CASE("diamond bound") {
  auto gen = test::rng(9);
  const ChoiMatrix a = random_choi(2, 2, 3, gen);
  const DistanceReport same = diamond_bound(a, a);
  CHECK(same.trace_distance == doctest::Approx(0.0));
  CHECK(same.diamond_upper_bound == doctest::Approx(0.0));

  const ChoiMatrix id2 = choi_from_kraus(QuantumChannel(2, 2, {ComplexMatrix::Identity(2, 2)}));
  ChoiMatrix mixed{2, 2, ComplexMatrix::Identity(4, 4) / 4.0};
  const DistanceReport rep = diamond_bound(id2, mixed);
  CHECK(rep.n == 2);
  CHECK(rep.diamond_upper_bound == doctest::Approx(3.0).epsilon(1e-12));

  for (int i = 0; i < 10; ++i) {
    const ChoiMatrix x = random_choi(3, 2, 2 + i % 5, gen);
    const ChoiMatrix y = random_choi(3, 2, 2 + (i + 2) % 5, gen);
    const DistanceReport r = diamond_bound(x, y);
    CHECK(r.diamond_upper_bound == doctest::Approx(2.0 * 3.0 * r.trace_distance));
    CHECK(r.diamond_upper_bound <= 2.0 * 3.0 + 1e-12);
  }
}

TEST_CASE("trace distance is a metric on random samples") {
  auto gen = test::rng(13);
  for (int rep = 0; rep < 12; ++rep) {
    const ChoiMatrix x = random_choi(2, 3, 1 + rep % 6, gen);
    const ChoiMatrix y = random_choi(2, 3, 1 + (rep + 1) % 6, gen);
    const ChoiMatrix z = random_choi(2, 3, 1 + (rep + 3) % 6, gen);
    const double dxy = trace_distance(x, y), dyx = trace_distance(y, x);
    CHECK(dxy == doctest::Approx(dyx).epsilon(1e-12));
    CHECK(trace_distance(x, y) + trace_distance(y, z) >= trace_distance(x, z) - 1e-12);
    CHECK(dxy > 1e-12);  // distinct random channels stay distinguishable
  }

  // identity of indiscernibles at the Choi level
  auto gen2 = test::rng(14);
  const ChoiMatrix x = random_choi(2, 2, 3, gen2);
  ChoiMatrix x_copy = x;
  CHECK(trace_distance(x, x_copy) < 1e-12);

  // unitary invariance: conjugating both Choi matrices leaves the value alone
  auto gen3 = test::rng(15);
  const ChoiMatrix a = random_choi(2, 2, 2, gen3);
  const ChoiMatrix b = random_choi(2, 2, 4, gen3);
  const ComplexMatrix u = haar_unitary(4, gen3);
  const ChoiMatrix ua{2, 2, u * a.matrix * u.adjoint()};
  const ChoiMatrix ub{2, 2, u * b.matrix * u.adjoint()};
  CHECK(trace_distance(ua, ub) == doctest::Approx(trace_distance(a, b)).epsilon(1e-12));
}
