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

#include "chandecomp/matgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace chandecomp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

// Orthonormalizes the columns of `a` listed in `determined` (in that order,
// modified Gram-Schmidt), then fills the columns in `free_cols` from standard
// basis candidates. Determined columns are expected to be near-orthonormal
// already; the order should put the most accurate ones first.
void complete_columns(ComplexMatrix& a, const std::vector<Index>& determined,
                      const std::vector<Index>& free_cols) {
  std::vector<Index> done;
  done.reserve(static_cast<size_t>(a.cols()));
  for (Index c : determined) {
    ComplexVector v = a.col(c);
    for (Index p : done) v -= (a.col(p).dot(v)) * a.col(p);
    // second pass for re-orthogonalization
    for (Index p : done) v -= (a.col(p).dot(v)) * a.col(p);
    const double nrm = v.norm();
    if (nrm < 1e-6) {
      throw std::domain_error("cosine_sine_decompose: degenerate column during orthonormalization");
    }
    a.col(c) = v / nrm;
    done.push_back(c);
  }
  std::vector<Index> frees = free_cols;
  std::sort(frees.begin(), frees.end());
  for (Index c : frees) {
    // best standard-basis candidate: its residual is at least sqrt(1/rows)
    ComplexVector best;
    double best_norm = -1.0;
    for (Index t = 0; t < a.rows(); ++t) {
      ComplexVector v = ComplexVector::Zero(a.rows());
      v(t) = Complex(1.0, 0.0);
      for (Index p : done) v -= (a.col(p).dot(v)) * a.col(p);
      const double nrm = v.norm();
      if (nrm > best_norm) {
        best_norm = nrm;
        best = std::move(v);
      }
    }
    if (best_norm < 1e-3) {
      throw std::domain_error("cosine_sine_decompose: failed to complete orthonormal basis");
    }
    for (Index p : done) best -= (a.col(p).dot(best)) * a.col(p);
    a.col(c) = best / best.norm();
    done.push_back(c);
  }
}

}  // namespace

ComplexMatrix givens(const GivensSpec& spec) {
  if (spec.dim < 2 || spec.i < 0 || spec.j <= spec.i || spec.j >= spec.dim) {
    throw std::invalid_argument("givens: need 0 <= i < j < dim");
  }
  const double t = normalize_angle(spec.theta);
  const double c = std::cos(t);
  const double s = std::sin(t);
  ComplexMatrix g = ComplexMatrix::Identity(spec.dim, spec.dim);
  g(spec.i, spec.i) = c;
  g(spec.j, spec.j) = c;
  g(spec.j, spec.i) = s;
  g(spec.i, spec.j) = -s;
  return g;
}

ComplexMatrix multiplexer(const MultiplexerSpec& spec) {
  if (spec.angles.empty()) throw std::invalid_argument("multiplexer: empty angle list");
  if (spec.control_dim != static_cast<Index>(spec.angles.size())) {
    throw std::invalid_argument("multiplexer: angles.length must equal control_dim");
  }
  const Index td = spec.target_dim;
  const Index dim = spec.control_dim * td;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Index l = 0; l < spec.control_dim; ++l) {
    m.block(l * td, l * td, td, td) =
        givens({spec.target_i, spec.target_j, spec.angles[static_cast<size_t>(l)], td});
  }
  return m;
}

ComplexMatrix haar_unitary(Index dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double ad = std::abs(d);
    q.col(k) *= (ad > 0) ? d / ad : Complex(1.0, 0.0);
  }
  return q;
}

ComplexMatrix param_unitary(Index dim, const RealVector& params) {
  if (dim < 1) throw std::invalid_argument("param_unitary: dim must be >= 1");
  if (params.size() != dim * dim - 1) {
    throw std::invalid_argument("param_unitary: expected dim^2-1 parameters, got " +
                                std::to_string(params.size()));
  }
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  Index k = 0;
  for (Index b = 1; b < dim; ++b) {
    for (Index a = 0; a < b; ++a) {
      const double x = params(k++);
      const double y = params(k++);
      h(a, b) += Complex(x, -y);
      h(b, a) += Complex(x, y);
    }
  }
  for (Index d = 1; d < dim; ++d) {
    // diag(1,...,1,-d,0,...) / sqrt(d(d+1)/2), traceless
    const double coeff = params(k++) * std::sqrt(2.0 / (static_cast<double>(d) * (d + 1)));
    for (Index t = 0; t < d; ++t) h(t, t) += coeff;
    h(d, d) -= coeff * static_cast<double>(d);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  ComplexVector phases(dim);
  for (Index t = 0; t < dim; ++t) {
    phases(t) = std::polar(1.0, es.eigenvalues()(t));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CsdFactorization cosine_sine_decompose(const ComplexMatrix& u, Index r1, Index c1) {
  const Index n = u.rows();
  if (u.cols() != n) throw std::invalid_argument("cosine_sine_decompose: matrix must be square");
  if (r1 < 1 || r1 >= n || c1 < 1 || c1 >= n) {
    throw std::invalid_argument("cosine_sine_decompose: partition must satisfy 1 <= r1,c1 < dim");
  }
  if (!is_unitary(u, 1e-8)) {
    throw std::domain_error("cosine_sine_decompose: input is not unitary");
  }
  const Index r2 = n - r1, c2 = n - c1;
  const Index q = std::min(r1, c1);
  const Index a = std::max<Index>({0, r1 - c2, c1 - r2});
  const Index s = q - a;
  const Index zr = r1 - q, zc = c1 - q;
  const Index b = r2 - c1 + a;

  Eigen::JacobiSVD<ComplexMatrix> svd(u.topLeftCorner(r1, c1),
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  ComplexMatrix w1 = svd.matrixU();
  ComplexMatrix v1 = svd.matrixV().adjoint();

  const double kFreeTol = 1e-11;      // below this a sine column is treated as free
  const double kClusterSine = 3e-6;   // sigma ~ 1 cluster: singular vectors may be mixed
  ComplexMatrix y = u.bottomLeftCorner(r2, c1) * v1.adjoint();

  // Near-unit singular values form a numerically degenerate cluster whose
  // right/left vectors the SVD may mix arbitrarily. Re-extract that block from
  // the sine side, where the data is well conditioned, and rotate the affected
  // V1 rows accordingly (the cosine block is 1 + O(sine^2), so leaving W1
  // alone costs below the reconstruction tolerance).
  Index csz = 0;
  while (csz < q && svd.singularValues()(csz) >= std::cos(kClusterSine)) ++csz;
  ComplexMatrix cluster_u;  // refined sine-side directions, ascending-theta slots
  RealVector cluster_s;
  if (csz > 0) {
    Eigen::JacobiSVD<ComplexMatrix> csvd(y.leftCols(csz),
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (csvd.singularValues()(0) <= kFreeTol) {
      // pure noise: every cluster column below the free threshold, nothing to refine
      csz = 0;
    } else {
      cluster_u.resize(r2, csz);
      cluster_s.resize(csz);
      for (Index t = 0; t < csz; ++t) {
        const Index from = csz - 1 - t;  // ascending theta = ascending sine
        cluster_s(t) = std::clamp(csvd.singularValues()(from), 0.0, 1.0);
        cluster_u.col(t) = csvd.matrixU().col(from);
      }
      ComplexMatrix vc_perm(csz, csz);
      for (Index t = 0; t < csz; ++t) vc_perm.col(t) = csvd.matrixV().col(csz - 1 - t);
      v1.topRows(csz) = vc_perm.adjoint() * v1.topRows(csz);
      w1.leftCols(csz) = w1.leftCols(csz) * vc_perm;  // keeps W1 Sigma V1 = U11
      y.leftCols(csz) = cluster_u * cluster_s.asDiagonal();
    }
  }

  std::vector<double> thetas(static_cast<size_t>(q));
  for (Index t = 0; t < q; ++t) {
    if (t < a) {
      thetas[static_cast<size_t>(t)] = 0.0;
    } else if (t < csz) {
      thetas[static_cast<size_t>(t)] = std::asin(cluster_s(t));
    } else {
      // both legs measured: sine from the column norm, cosine from the SVD
      thetas[static_cast<size_t>(t)] =
          std::atan2(y.col(t).norm(), std::clamp(svd.singularValues()(t), 0.0, 1.0));
    }
  }

  // Columns of W2: [0,b) free, [b,b+s) carry the sines, [b+s,r2) the identity
  // rows paired with the c1-q surplus input columns.
  ComplexMatrix w2 = ComplexMatrix::Zero(r2, r2);
  std::vector<Index> determined;
  std::vector<Index> free_cols;
  for (Index i = 0; i < b; ++i) free_cols.push_back(i);
  for (Index j = 0; j < zc; ++j) {
    w2.col(b + s + j) = y.col(q + j);
    determined.push_back(b + s + j);
  }
  // Largest sines first: those columns are the most accurately determined.
  for (Index k = s - 1; k >= 0; --k) {
    const Index t = a + k;
    const double sn = std::sin(thetas[static_cast<size_t>(t)]);
    if (sn > kFreeTol) {
      if (t < csz) {
        w2.col(b + k) = cluster_u.col(t);
      } else {
        w2.col(b + k) = y.col(t) / y.col(t).norm();
      }
      determined.push_back(b + k);
    } else {
      free_cols.push_back(b + k);
    }
  }
  complete_columns(w2, determined, free_cols);

  // Rows of V2, each obtained by a division by max(sin, cos) >= 1/sqrt(2):
  // near-zero angles route through U22, near-right angles through U12.
  ComplexMatrix v2 = ComplexMatrix::Zero(c2, c2);
  ComplexMatrix w1u12 = w1.adjoint() * u.topRightCorner(r1, c2);
  ComplexMatrix w2u22 = w2.adjoint() * u.bottomRightCorner(r2, c2);
  for (Index i = 0; i < b; ++i) v2.row(i) = w2u22.row(i);
  for (Index k = 0; k < s; ++k) {
    const double th = thetas[static_cast<size_t>(a + k)];
    const double sn = std::sin(th), cs = std::cos(th);
    if (sn >= cs) {
      v2.row(b + k) = -w1u12.row(a + k) / sn;
    } else {
      v2.row(b + k) = w2u22.row(b + k) / cs;
    }
  }
  for (Index j = 0; j < zr; ++j) v2.row(b + s + j) = w1u12.row(q + j);
  {
    ComplexMatrix v2ad = v2.adjoint();
    std::vector<Index> all_rows(static_cast<size_t>(c2));
    for (Index i = 0; i < c2; ++i) all_rows[static_cast<size_t>(i)] = i;
    complete_columns(v2ad, all_rows, {});
    v2 = v2ad.adjoint();
  }

  CsdFactorization f;
  f.W_blocks = {std::move(w1), std::move(w2)};
  f.V_blocks = {std::move(v1), std::move(v2)};
  f.thetas = std::move(thetas);
  f.partition = {r1, r2, c1, c2};

  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index t = 0; t < q; ++t) m(t, t) = std::cos(f.thetas[static_cast<size_t>(t)]);
  for (Index k = 0; k < s; ++k) {
    const double th = f.thetas[static_cast<size_t>(a + k)];
    m(a + k, c1 + b + k) = -std::sin(th);
    m(r1 + b + k, a + k) = std::sin(th);
    m(r1 + b + k, c1 + b + k) = std::cos(th);
  }
  for (Index j = 0; j < zr; ++j) m(q + j, c1 + b + s + j) = 1.0;
  for (Index i = 0; i < b; ++i) m(r1 + i, c1 + i) = 1.0;
  for (Index j = 0; j < zc; ++j) m(r1 + b + s + j, q + j) = 1.0;
  f.M_middle = std::move(m);
  return f;
}

ComplexMatrix csd_reconstruct(const CsdFactorization& f) {
  const Index r1 = f.partition.r1, r2 = f.partition.r2;
  const Index c1 = f.partition.c1, c2 = f.partition.c2;
  const Index n = r1 + r2;
  ComplexMatrix w = ComplexMatrix::Zero(n, n);
  w.topLeftCorner(r1, r1) = f.W_blocks[0];
  w.bottomRightCorner(r2, r2) = f.W_blocks[1];
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  v.topLeftCorner(c1, c1) = f.V_blocks[0];
  v.bottomRightCorner(c2, c2) = f.V_blocks[1];
  return w * f.M_middle * v;
}

}  // namespace chandecomp
