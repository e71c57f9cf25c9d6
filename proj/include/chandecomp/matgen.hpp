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

#include <array>
#include <random>
#include <vector>

#include "chandecomp/types.hpp"

namespace chandecomp {

/// Two-level rotation on span{|i>,|j>} by angle theta, identity elsewhere.
/// Sign convention: +sin at (j,i), -sin at (i,j).
struct GivensSpec {
  Index i = 0;
  Index j = 1;
  double theta = 0.0;
  Index dim = 2;
};

ComplexMatrix givens(const GivensSpec& spec);

/// Uniformly controlled rotation: block diagonal over the control basis,
/// block l being the Givens rotation G_{ij}(angles[l]) on the target space.
/// The control factor sits on the left of the tensor product, so the result
/// is control_dim x target_dim blocks of size target_dim.
struct MultiplexerSpec {
  Index target_i = 0;
  Index target_j = 1;
  Index target_dim = 2;
  std::vector<double> angles;  // one per control basis state
  Index control_dim = 0;
};

ComplexMatrix multiplexer(const MultiplexerSpec& spec);

/// Haar-distributed random unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases folded back into Q.
ComplexMatrix haar_unitary(Index dim, std::mt19937_64& rng);

/// Smooth surjective parameterization of SU(dim): exp(i H) for H the traceless
/// Hermitian generator built from dim^2-1 real coefficients on a fixed
/// generalized Gell-Mann basis. Basis order: for each b=1..dim-1, for each
/// a=0..b-1 the symmetric then antisymmetric pair generator, followed by the
/// dim-1 diagonal generators. All-zero coefficients give the identity.
ComplexMatrix param_unitary(Index dim, const RealVector& params);

/// Result of the 2x2-partitioned cosine-sine decomposition U = W M V with
/// W = diag(W1,W2), V = diag(V1,V2).
///
/// With q = min(r1,c1), a = max(0, r1-c2, c1-r2) structurally forced unit
/// cosines, s = q-a free angles and b = r2-c1+a, the middle factor M carries
/// cos(theta_t) at (t,t) for t<q, -sin(theta_t) at (t, c1+b+t-a) for t in
/// [a,q), identity rows at (q+j, c1+b+s+j), sin at (r1+b+k, a+k), cosines at
/// (r1+b+k, c1+b+k), an identity block at (r1+i, c1+i) for i<b, and identity
/// rows at (r1+b+s+j, q+j). Angles are sorted ascending in [0, pi/2].
struct CsdFactorization {
  std::array<ComplexMatrix, 2> W_blocks;
  ComplexMatrix M_middle;
  std::array<ComplexMatrix, 2> V_blocks;
  std::vector<double> thetas;
  struct Partition {
    Index r1 = 0, r2 = 0, c1 = 0, c2 = 0;
  } partition;
};

/// Cosine-sine decomposition of a unitary U for the row split (r1, N-r1) and
/// column split (c1, N-c1). Throws std::domain_error if U is not unitary to
/// 1e-8 and std::invalid_argument for degenerate partitions.
CsdFactorization cosine_sine_decompose(const ComplexMatrix& u, Index r1, Index c1);

/// diag(W1,W2) * M * diag(V1,V2); inverse of cosine_sine_decompose up to
/// numerical error.
ComplexMatrix csd_reconstruct(const CsdFactorization& f);

}  // namespace chandecomp
