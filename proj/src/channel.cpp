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

#include "chandecomp/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chandecomp/matgen.hpp"

namespace chandecomp {

namespace {

constexpr double kRankTol = 1e-10;  // relative eigen/singular value threshold

// Row-major vectorization in output-major Choi ordering: v[a*n+i] = K(a,i).
ComplexVector vec_kraus(const ComplexMatrix& k) {
  const Index m = k.rows(), n = k.cols();
  ComplexVector v(m * n);
  for (Index a = 0; a < m; ++a)
    for (Index i = 0; i < n; ++i) v(a * n + i) = k(a, i);
  return v;
}

ComplexMatrix unvec_kraus(const ComplexVector& v, Index m, Index n) {
  ComplexMatrix k(m, n);
  for (Index a = 0; a < m; ++a)
    for (Index i = 0; i < n; ++i) k(a, i) = v(a * n + i);
  return k;
}

ComplexMatrix tp_residual_matrix(const std::vector<ComplexMatrix>& kraus, Index n) {
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus) acc += k.adjoint() * k;
  return acc - ComplexMatrix::Identity(n, n);
}

void validate_state(const ComplexMatrix& rho, Index dim, const char* who) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument(std::string(who) + ": state has wrong shape");
  }
  if (!is_hermitian(rho, 1e-10)) {
    throw std::domain_error(std::string(who) + ": state is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-10 || std::abs(rho.trace().imag()) > 1e-10) {
    throw std::domain_error(std::string(who) + ": state does not have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::domain_error(std::string(who) + ": state is not positive semidefinite");
  }
}

// Phase gauge for canonical Kraus operators: rotate so the largest-modulus
// entry (lowest index on ties) is real positive.
void fix_phase(ComplexMatrix& k) {
  Index best_a = 0, best_i = 0;
  double best = -1.0;
  for (Index a = 0; a < k.rows(); ++a) {
    for (Index i = 0; i < k.cols(); ++i) {
      const double mag = std::abs(k(a, i));
      if (mag > best + 1e-15) {
        best = mag;
        best_a = a;
        best_i = i;
      }
    }
  }
  if (best <= 0) return;
  const Complex z = k(best_a, best_i);
  k *= std::conj(z) / std::abs(z);
}

}  // namespace

std::string to_string(Extremality e) {
  switch (e) {
    case Extremality::kExtreme: return "extreme";
    case Extremality::kQuasiExtreme: return "quasi-extreme";
    case Extremality::kNotGeneralizedExtreme: return "not-generalized-extreme";
  }
  return "unknown";
}

QuantumChannel::QuantumChannel(Index n, Index m, std::vector<ComplexMatrix> kraus, double tp_tol)
    : n_(n), m_(m), kraus_(std::move(kraus)) {
  if (n < 1 || m < 1) throw std::invalid_argument("QuantumChannel: dimensions must be positive");
  if (kraus_.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus list");
  for (const auto& k : kraus_) {
    if (k.rows() != m || k.cols() != n) {
      throw std::invalid_argument("QuantumChannel: Kraus operators must be m x n");
    }
    if (!k.allFinite()) throw std::invalid_argument("QuantumChannel: non-finite Kraus entry");
  }
  const double res = tp_residual_matrix(kraus_, n).norm();
  if (res > tp_tol) {
    std::ostringstream os;
    os << "QuantumChannel: trace preservation violated, residual " << res;
    throw std::domain_error(os.str());
  }
}

ComplexMatrix apply(const QuantumChannel& ch, const ComplexMatrix& rho) {
  validate_state(rho, ch.input_dim(), "apply");
  ComplexMatrix out = ComplexMatrix::Zero(ch.output_dim(), ch.output_dim());
  for (const auto& k : ch.kraus()) out += k * rho * k.adjoint();
  return out;
}

ChoiMatrix choi_from_kraus(const QuantumChannel& ch) {
  const Index n = ch.input_dim(), m = ch.output_dim();
  ComplexMatrix c = ComplexMatrix::Zero(n * m, n * m);
  for (const auto& k : ch.kraus()) {
    const ComplexVector v = vec_kraus(k);
    c += v * v.adjoint();
  }
  c /= static_cast<double>(n);
  return {n, m, std::move(c)};
}

void validate_choi(const ChoiMatrix& c) {
  const Index n = c.n, m = c.m, d = n * m;
  if (n < 1 || m < 1 || c.matrix.rows() != d || c.matrix.cols() != d) {
    throw std::invalid_argument("validate_choi: matrix shape does not match dimensions");
  }
  if (!is_hermitian(c.matrix, 1e-12)) {
    throw std::domain_error("validate_choi: not Hermitian");
  }
  if (std::abs(c.matrix.trace().real() - 1.0) > 1e-10) {
    throw std::domain_error("validate_choi: trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.matrix, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::domain_error("validate_choi: not positive semidefinite");
  }
  ComplexMatrix pt = ComplexMatrix::Zero(n, n);
  for (Index a = 0; a < m; ++a) pt += c.matrix.block(a * n, a * n, n, n);
  if ((pt - ComplexMatrix::Identity(n, n) / static_cast<double>(n)).norm() > 1e-10) {
    throw std::domain_error("validate_choi: partial trace over the output is not 1/n");
  }
}

QuantumChannel kraus_from_choi(const ChoiMatrix& c) {
  validate_choi(c);
  const Index n = c.n, m = c.m;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.matrix);
  const double lmax = es.eigenvalues().maxCoeff();
  std::vector<ComplexMatrix> kraus;
  for (Index t = es.eigenvalues().size() - 1; t >= 0; --t) {  // descending
    const double lambda = es.eigenvalues()(t);
    if (lambda <= kRankTol * lmax) break;
    ComplexMatrix k = unvec_kraus(es.eigenvectors().col(t), m, n);
    k *= std::sqrt(lambda * static_cast<double>(n));
    fix_phase(k);
    kraus.push_back(std::move(k));
  }
  return QuantumChannel(n, m, std::move(kraus), 1e-8);
}

CptpReport validate_cptp(const std::vector<ComplexMatrix>& kraus, Index n, Index m) {
  CptpReport rep;
  if (n < 1 || m < 1 || kraus.empty()) {
    rep.message = "empty Kraus list or non-positive dimensions";
    return rep;
  }
  for (const auto& k : kraus) {
    if (k.rows() != m || k.cols() != n || !k.allFinite()) {
      std::ostringstream os;
      os << "expected " << m << "x" << n << " finite Kraus operators, got " << k.rows() << "x"
         << k.cols();
      rep.message = os.str();
      return rep;
    }
  }
  rep.shapes_ok = true;
  rep.tp_residual = tp_residual_matrix(kraus, n).norm();

  ComplexMatrix c = ComplexMatrix::Zero(n * m, n * m);
  for (const auto& k : kraus) {
    const ComplexVector v = vec_kraus(k);
    c += v * v.adjoint();
  }
  c /= static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c, Eigen::EigenvaluesOnly);
  rep.min_choi_eigenvalue = es.eigenvalues().minCoeff();

  rep.accepted = rep.tp_residual < 1e-8 && rep.min_choi_eigenvalue > -1e-10;
  if (rep.accepted) {
    rep.message = "ok";
  } else {
    std::ostringstream os;
    os << "rejected: TP residual " << rep.tp_residual << ", min Choi eigenvalue "
       << rep.min_choi_eigenvalue;
    rep.message = os.str();
  }
  return rep;
}

ExtremalityReport classify_extremality(const QuantumChannel& ch, double tol) {
  const QuantumChannel canon = kraus_from_choi(choi_from_kraus(ch));
  const Index n = ch.input_dim();
  const Index r = static_cast<Index>(canon.kraus().size());

  ComplexMatrix prods(n * n, r * r);
  Index col = 0;
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      const ComplexMatrix p = canon.kraus()[static_cast<size_t>(i)].adjoint() *
                              canon.kraus()[static_cast<size_t>(j)];
      prods.col(col++) = Eigen::Map<const ComplexVector>(p.data(), n * n);
    }
  }
  const ComplexMatrix gram = prods.adjoint() * prods;
  Eigen::JacobiSVD<ComplexMatrix> svd(gram);
  const double smax = svd.singularValues()(0);
  Index gram_rank = 0;
  for (Index t = 0; t < svd.singularValues().size(); ++t) {
    if (svd.singularValues()(t) > tol * smax) ++gram_rank;
  }

  ExtremalityReport rep;
  rep.kraus_rank = r;
  rep.gram_rank = gram_rank;
  rep.tolerance_used = tol;
  if (r > n) {
    rep.classification = Extremality::kNotGeneralizedExtreme;
  } else if (gram_rank == r * r) {
    rep.classification = Extremality::kExtreme;
  } else {
    rep.classification = Extremality::kQuasiExtreme;
  }
  return rep;
}

QuantumChannel random_channel(Index n, Index m, Index rank, std::mt19937_64& rng) {
  if (rank < 1 || rank > n * m) {
    throw std::invalid_argument("random_channel: need 1 <= rank <= n*m");
  }
  if (m * rank < n) {
    throw std::invalid_argument("random_channel: no isometry exists unless m*rank >= n");
  }
  const ComplexMatrix u = haar_unitary(m * rank, rng);
  const ComplexMatrix iso = u.leftCols(n);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<size_t>(rank));
  for (Index i = 0; i < rank; ++i) kraus.push_back(iso.middleRows(i * m, m));
  return QuantumChannel(n, m, std::move(kraus));
}

QuantumChannel trace_channel(Index n) {
  if (n < 1) throw std::invalid_argument("trace_channel: n must be >= 1");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    ComplexMatrix bra = ComplexMatrix::Zero(1, n);
    bra(0, i) = 1.0;
    kraus.push_back(std::move(bra));
  }
  return QuantumChannel(n, 1, std::move(kraus));
}

QuantumChannel prep_channel(const ComplexMatrix& state) {
  const Index m = state.rows();
  validate_state(state, m, "prep_channel");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(state);
  const double lmax = es.eigenvalues().maxCoeff();
  std::vector<ComplexMatrix> kraus;
  for (Index t = es.eigenvalues().size() - 1; t >= 0; --t) {
    const double lambda = es.eigenvalues()(t);
    if (lambda <= kRankTol * lmax) break;
    ComplexMatrix k = es.eigenvectors().col(t) * std::sqrt(lambda);
    fix_phase(k);
    kraus.push_back(std::move(k));
  }
  return QuantumChannel(1, m, std::move(kraus));
}

QuantumChannel convex_combine(const std::vector<QuantumChannel>& channels,
                              const RealVector& probs) {
  if (channels.empty() || probs.size() != static_cast<Index>(channels.size())) {
    throw std::invalid_argument("convex_combine: need one probability per channel");
  }
  const Index n = channels.front().input_dim(), m = channels.front().output_dim();
  for (const auto& ch : channels) {
    if (ch.input_dim() != n || ch.output_dim() != m) {
      throw std::invalid_argument("convex_combine: mismatched channel shapes");
    }
  }
  if (probs.minCoeff() < 0.0 || std::abs(probs.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("convex_combine: probabilities must be a simplex point");
  }
  std::vector<ComplexMatrix> kraus;
  for (size_t i = 0; i < channels.size(); ++i) {
    const double w = std::sqrt(probs(static_cast<Index>(i)));
    for (const auto& k : channels[i].kraus()) kraus.push_back(w * k);
  }
  return QuantumChannel(n, m, std::move(kraus));
}

ComplexMatrix stinespring(const QuantumChannel& ch) {
  const Index n = ch.input_dim(), m = ch.output_dim();
  const Index r = static_cast<Index>(ch.kraus().size());
  ComplexMatrix v(m * r, n);
  for (Index i = 0; i < r; ++i) v.middleRows(i * m, m) = ch.kraus()[static_cast<size_t>(i)];
  return v;
}

}  // namespace chandecomp
