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
#include <string>
#include <vector>

#include "chandecomp/types.hpp"

namespace chandecomp {

/// A channel from n-dimensional to m-dimensional states, held as a list of
/// m x n Kraus operators with sum_i K_i^dag K_i = 1_n. Immutable after
/// construction; construction validates shapes and trace preservation.
class QuantumChannel {
 public:
  QuantumChannel(Index n, Index m, std::vector<ComplexMatrix> kraus, double tp_tol = 1e-10);

  Index input_dim() const { return n_; }
  Index output_dim() const { return m_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  Index n_, m_;
  std::vector<ComplexMatrix> kraus_;
};

/// nm x nm Choi state of a channel, unit trace, in output-major ordering:
/// basis index (a, i) -> a*n + i for output level a and input level i.
struct ChoiMatrix {
  Index n = 0;
  Index m = 0;
  ComplexMatrix matrix;
};

/// Checks Hermiticity (1e-12), positivity (eigenvalues >= -1e-10), unit trace
/// (1e-10) and that the partial trace over the output factor is 1_n/n (1e-10).
/// Throws std::domain_error naming the violated property.
void validate_choi(const ChoiMatrix& c);

struct CptpReport {
  bool accepted = false;
  bool shapes_ok = false;
  double tp_residual = 0.0;       // ||sum K^dag K - 1||_F
  double min_choi_eigenvalue = 0.0;
  std::string message;
};

enum class Extremality { kExtreme, kQuasiExtreme, kNotGeneralizedExtreme };

std::string to_string(Extremality e);

struct ExtremalityReport {
  Index kraus_rank = 0;  // canonical Kraus count = Choi rank
  Index gram_rank = 0;   // rank of the Gram matrix of {K_i^dag K_j}
  Extremality classification = Extremality::kNotGeneralizedExtreme;
  double tolerance_used = 0.0;
};

/// sum_i K_i rho K_i^dag. rho must be an n x n density matrix (validated).
ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho);

ChoiMatrix choi_from_kraus(const QuantumChannel& ch);

/// Canonical Kraus set from the Choi eigendecomposition. Eigenvector phases
/// are fixed by making the largest-modulus entry real positive (ties broken by
/// lowest row-major index) so serialization is reproducible.
QuantumChannel kraus_from_choi(const ChoiMatrix& c);

/// Structured CPTP check; never throws on mathematically invalid input.
/// Accepts iff the TP residual is < 1e-8 and the Choi matrix is positive
/// semidefinite to -1e-10.
CptpReport validate_cptp(const std::vector<ComplexMatrix>& kraus, Index n, Index m);

/// Classification per Choi's independence criterion on the canonical Kraus
/// set: extreme iff gram_rank == r^2 with r <= n, quasi-extreme if r <= n with
/// a rank-deficient Gram matrix, otherwise not generalized extreme. Ranks use
/// the relative threshold `tol` on singular values.
ExtremalityReport classify_extremality(const QuantumChannel& ch, double tol = 1e-10);

/// Random rank-`rank` channel: a Haar isometry from dimension n into
/// m*rank (the first block-column of a Haar unitary) sliced into Kraus
/// operators. Requires 1 <= rank <= n*m and m*rank >= n.
QuantumChannel random_channel(Index n, Index m, Index rank, std::mt19937_64& rng);

/// The single point of the (n,1) channel set: Kraus operators {<i|}.
QuantumChannel trace_channel(Index n);

/// The (1,m) channel preparing `state`; its Choi matrix equals the state.
QuantumChannel prep_channel(const ComplexMatrix& state);

/// Convex mixture: Kraus set is the union of sqrt(p_i)-scaled member sets.
QuantumChannel convex_combine(const std::vector<QuantumChannel>& channels,
                              const RealVector& probs);

/// The (m*r) x n stacked-Kraus isometry V with V^dag V = 1_n.
ComplexMatrix stinespring(const QuantumChannel& ch);

}  // namespace chandecomp
