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

#include "chandecomp/ansatz.hpp"

#include <cmath>
#include <sstream>

#include "chandecomp/matgen.hpp"

namespace chandecomp {

namespace {

Index su_len(Index d) { return d * d - 1; }

bool family_i_shape(Index n, Index m) {
  return (n == m && n >= 2 && n <= 4) ||
         (n == 2 && m == 3) || (n == 3 && m == 2) || (n == 2 && m == 4) || (n == 4 && m == 2);
}

// Number of angle parameters per component, in layout order before the inner
// SU blocks.
Index angle_len(AnsatzFamily family, Index n, Index m) {
  if (family == AnsatzFamily::kIII) return (m >= n) ? n * (n - 1) : n * (m - 1);
  if (n == m) return n * (n - 1);            // (d-1) multiplexers of d angles
  if (n == 2 && m == 3) return 2;
  if (n == 3 && m == 2) return 4;            // two D angles + two multiplexer angles
  if (n == 2 && m == 4) return 6;
  if (n == 4 && m == 2) return 8;
  if (n == 3 && m == 4) return 6;            // family II only
  if (n == 4 && m == 3) return 8;            // family II only
  return 0;
}

Index inner_len(Index n, Index m) {  // family I only
  if (n == 3 && m == 3) return su_len(3);
  if (n == 4 && m == 4) return 2 * su_len(4);
  if (n == 3 && m == 2) return 2 * su_len(2);
  if (n == 4 && m == 2) return 4 * su_len(2);
  if (n == 2 && m == 4) return 2 * su_len(2);
  return 0;
}

// Amplitudes of an L-level cascade of L-1 rotations: amp_0 = cos t_0,
// amp_k = sin t_0 ... sin t_{k-1} cos t_k, amp_{L-1} = prod sin.
RealVector cascade(const Eigen::Ref<const RealVector>& t, Index levels) {
  RealVector amp(levels);
  double run = 1.0;
  for (Index k = 0; k + 1 < levels; ++k) {
    amp(k) = run * std::cos(t(k));
    run *= std::sin(t(k));
  }
  amp(levels - 1) = run;
  return amp;
}

struct ParamReader {
  const RealVector& p;
  Index pos = 0;
  RealVector take(Index count) {
    RealVector out = p.segment(pos, count);
    pos += count;
    return out;
  }
  double take1() { return p(pos++); }
  ComplexMatrix su(Index d) { return param_unitary(d, take(su_len(d))); }
};

std::vector<ComplexMatrix> build_family_i(Index n, Index m, const RealVector& p, bool keep_inner) {
  ParamReader r{p};
  std::vector<ComplexMatrix> kraus;

  auto inner_su = [&](Index d) -> ComplexMatrix {
    if (keep_inner) return r.su(d);
    return ComplexMatrix::Identity(d, d);
  };
  auto skip_inner = [&](Index count) {
    if (keep_inner) r.pos += count;
  };
  auto cs_diag = [](const Eigen::Ref<const RealVector>& t, bool sines) {
    ComplexMatrix d = ComplexMatrix::Zero(t.size(), t.size());
    for (Index i = 0; i < t.size(); ++i) d(i, i) = sines ? std::sin(t(i)) : std::cos(t(i));
    return d;
  };

  if (n == 2 && m == 2) {
    const ComplexMatrix v = r.su(2);
    const RealVector t = r.take(2);
    const ComplexMatrix w1 = r.su(2), w2 = r.su(2);
    kraus.push_back(w1 * cs_diag(t, false) * v);
    kraus.push_back(w2 * cs_diag(t, true) * v);
  } else if (n == 3 && m == 3) {
    const ComplexMatrix v = r.su(3);
    const RealVector t0 = r.take(3), t1 = r.take(3);
    const ComplexMatrix z = inner_su(3);
    const ComplexMatrix w1 = r.su(3), w2 = r.su(3), w3 = r.su(3);
    const ComplexMatrix s0v = cs_diag(t0, true) * v;
    kraus.push_back(w1 * cs_diag(t0, false) * v);
    kraus.push_back(w2 * cs_diag(t1, false) * z * s0v);
    kraus.push_back(w3 * cs_diag(t1, true) * z * s0v);
  } else if (n == 4 && m == 4) {
    const ComplexMatrix v = r.su(4);
    const RealVector t0 = r.take(4), t2 = r.take(4), t1 = r.take(4);
    const ComplexMatrix y = inner_su(4), z = inner_su(4);
    const ComplexMatrix w1 = r.su(4), w2 = r.su(4), w3 = r.su(4), w4 = r.su(4);
    const ComplexMatrix s0v = cs_diag(t0, true) * v;
    const ComplexMatrix ys0v = y * s0v;
    const ComplexMatrix zs2ys0v = z * cs_diag(t2, true) * ys0v;
    kraus.push_back(w1 * cs_diag(t0, false) * v);
    kraus.push_back(w2 * cs_diag(t2, false) * ys0v);
    kraus.push_back(w3 * cs_diag(t1, false) * zs2ys0v);
    kraus.push_back(w4 * cs_diag(t1, true) * zs2ys0v);
  } else if (n == 3 && m == 2) {
    const ComplexMatrix v = r.su(3);
    const RealVector t = r.take(2), phi = r.take(2);
    const ComplexMatrix f1 = inner_su(2), f2 = inner_su(2);
    const ComplexMatrix w1 = r.su(2), w2 = r.su(2), w3 = r.su(2);
    ComplexMatrix d11 = ComplexMatrix::Zero(2, 3), d21 = ComplexMatrix::Zero(2, 3),
                  d31 = ComplexMatrix::Zero(2, 3);
    d11(0, 0) = std::cos(t(0));
    d11(1, 1) = std::cos(t(1));
    d21(1, 0) = std::sin(t(0));
    d31(0, 1) = std::sin(t(1));
    d31(1, 2) = 1.0;  // the structural quarter-turn of the second input block
    const ComplexMatrix c = cs_diag(phi, false), s = cs_diag(phi, true);
    kraus.push_back(w1 * d11 * v);
    kraus.push_back(w2 * (c * f1 * d21 - s * f2 * d31) * v);
    kraus.push_back(w3 * (s * f1 * d21 + c * f2 * d31) * v);
  } else if (n == 2 && m == 3) {
    const ComplexMatrix w1 = r.su(2);
    const RealVector t = r.take(2);
    const ComplexMatrix v1 = r.su(3), v2 = r.su(3);
    ComplexMatrix d11t = ComplexMatrix::Zero(3, 2), d12t = ComplexMatrix::Zero(3, 2);
    d11t(0, 0) = std::cos(t(0));
    d11t(1, 1) = std::cos(t(1));
    d12t(0, 0) = -std::sin(t(0));
    d12t(1, 1) = -std::sin(t(1));
    kraus.push_back(v1 * d11t * w1);
    kraus.push_back(v2 * d12t * w1);
  } else if (n == 4 && m == 2) {
    const ComplexMatrix v = r.su(4);
    const RealVector t0 = r.take(2), t1 = r.take(2), t2 = r.take(2), t3 = r.take(2);
    const ComplexMatrix f1 = inner_su(2), f2 = inner_su(2), f3 = inner_su(2), f4 = inner_su(2);
    const ComplexMatrix c0 = cs_diag(t0, false), s0 = cs_diag(t0, true);
    const ComplexMatrix c1 = cs_diag(t1, false), s1 = cs_diag(t1, true);
    const ComplexMatrix c2 = cs_diag(t2, false), s2 = cs_diag(t2, true);
    const ComplexMatrix c3 = cs_diag(t3, false), s3 = cs_diag(t3, true);
    const ComplexMatrix blocks[4][2] = {
        {c1 * f1 * c2, -s1 * f2 * c3},
        {s1 * f1 * c2, c1 * f2 * c3},
        {c0 * f3 * s2, -s0 * f4 * s3},
        {s0 * f3 * s2, c0 * f4 * s3},
    };
    for (int i = 0; i < 4; ++i) {
      const ComplexMatrix wi = r.su(2);
      ComplexMatrix row(2, 4);
      row << blocks[i][0], blocks[i][1];
      kraus.push_back(wi * row * v);
    }
  } else if (n == 2 && m == 4) {
    const ComplexMatrix v = r.su(2);
    const RealVector t1 = r.take(2), t2 = r.take(2), t3 = r.take(2);
    const ComplexMatrix f1 = inner_su(2), f2 = inner_su(2);
    const ComplexMatrix c1 = cs_diag(t1, false), s1 = cs_diag(t1, true);
    const ComplexMatrix c2 = cs_diag(t2, false), s2 = cs_diag(t2, true);
    const ComplexMatrix c3 = cs_diag(t3, false), s3 = cs_diag(t3, true);
    const ComplexMatrix w0 = r.su(4), w1 = r.su(4);
    ComplexMatrix col0(4, 2), col1(4, 2);
    col0 << c2 * f1 * c1, -c3 * f2 * s1;
    col1 << -s2 * f1 * c1, s3 * f2 * s1;
    kraus.push_back(w0 * col0 * v);
    kraus.push_back(w1 * col1 * v);
  } else if (n == 3 && m == 4) {
    // family II only: qutrit cascade padded to four output rows
    const ComplexMatrix v = r.su(3);
    const RealVector t0 = r.take(3), t1 = r.take(3);
    skip_inner(0);
    for (Index i = 0; i < 3; ++i) {
      const ComplexMatrix wi = r.su(4);
      ComplexMatrix delta = ComplexMatrix::Zero(4, 3);
      for (Index s = 0; s < 3; ++s) {
        const double amp = (i == 0)   ? std::cos(t0(s))
                           : (i == 1) ? std::sin(t0(s)) * std::cos(t1(s))
                                      : std::sin(t0(s)) * std::sin(t1(s));
        delta(s, s) = amp;
      }
      kraus.push_back(wi * delta * v);
    }
  } else if (n == 4 && m == 3) {
    // family II only: three-stage cascade, cores as documented below
    const ComplexMatrix v = r.su(4);
    const RealVector ta = r.take(3), tb = r.take(3), tg = r.take(2);
    const double ca1 = std::cos(ta(0)), sa1 = std::sin(ta(0));
    const double ca2 = std::cos(ta(1)), sa2 = std::sin(ta(1));
    const double ca3 = std::cos(ta(2)), sa3 = std::sin(ta(2));
    const double cb1 = std::cos(tb(0)), sb1 = std::sin(tb(0));
    const double cb2 = std::cos(tb(1)), sb2 = std::sin(tb(1));
    const double cb3 = std::cos(tb(2)), sb3 = std::sin(tb(2));
    const double cg1 = std::cos(tg(0)), sg1 = std::sin(tg(0));
    const double cg2 = std::cos(tg(1)), sg2 = std::sin(tg(1));
    ComplexMatrix delta[4];
    for (auto& d : delta) d = ComplexMatrix::Zero(3, 4);
    delta[0](0, 0) = ca1;
    delta[0](1, 1) = ca2;
    delta[0](2, 2) = ca3;
    delta[1](0, 1) = -sb1 * sa2;
    delta[1](1, 2) = -sb2 * sa3;
    delta[1](2, 3) = -sb3;
    delta[2](0, 0) = sa1;
    delta[2](1, 1) = cg1 * cb1 * sa2;
    delta[2](2, 2) = cg2 * cb2 * sa3;
    delta[3](0, 1) = sg1 * cb1 * sa2;
    delta[3](1, 2) = sg2 * cb2 * sa3;
    delta[3](2, 3) = cb3;
    for (int i = 0; i < 4; ++i) {
      const ComplexMatrix wi = r.su(3);
      kraus.push_back(wi * delta[i] * v);
    }
  }
  return kraus;
}

std::vector<ComplexMatrix> build_family_iii(Index n, Index m, const RealVector& p) {
  ParamReader r{p};
  const ComplexMatrix v = r.su(n);
  const Index per_level = (m >= n) ? (n - 1) : (m - 1);
  std::vector<RealVector> amps;
  amps.reserve(static_cast<size_t>(n));
  for (Index s = 0; s < n; ++s) {
    amps.push_back(cascade(r.take(per_level), per_level + 1));
  }
  const ComplexMatrix w = r.su(m);

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) {
    ComplexMatrix f = ComplexMatrix::Zero(m, n);
    if (m >= n) {
      // F_i = X_i^(m) * pad * E_i: level s lands on output row (s - i) mod m.
      for (Index s = 0; s < n; ++s) {
        Index row = (s - i) % m;
        if (row < 0) row += m;
        f(row, s) = amps[static_cast<size_t>(s)](i);
      }
    } else {
      // Truncated shift: level s feeds Kraus i only if (s - i) mod n < m;
      // the surviving window of each level carries its own cascade.
      for (Index s = 0; s < n; ++s) {
        Index row = (s - i) % n;
        if (row < 0) row += n;
        if (row < m) f(row, s) = amps[static_cast<size_t>(s)](row);
      }
    }
    kraus.push_back(w * f * v);
  }
  return kraus;
}

}  // namespace

bool family_supports(AnsatzFamily family, Index n, Index m) {
  if (family == AnsatzFamily::kI) return family_i_shape(n, m);
  return n >= 2 && n <= 4 && m >= 2 && m <= 4;
}

Index param_count(AnsatzFamily family, Index n, Index m) {
  if (!family_supports(family, n, m)) {
    std::ostringstream os;
    os << "param_count: family " << static_cast<int>(family) << " does not support shape (" << n
       << "," << m << "); family I supports (2,2),(3,3),(4,4),(2,3),(3,2),(2,4),(4,2), families "
          "II/III support all 2 <= n,m <= 4";
    throw capability_error(os.str());
  }
  if (family == AnsatzFamily::kIII) {
    return su_len(n) + angle_len(family, n, m) + su_len(m);
  }
  Index count = su_len(n) + angle_len(family, n, m) + n * su_len(m);
  if (family == AnsatzFamily::kI) count += inner_len(n, m);
  return count;
}

std::vector<ParamKind> param_kinds(AnsatzFamily family, Index n, Index m) {
  const Index total = param_count(family, n, m);
  const Index angles = angle_len(family, n, m);
  std::vector<ParamKind> kinds(static_cast<size_t>(total), ParamKind::kSuCoefficient);
  const Index angle_start = su_len(n);
  for (Index k = 0; k < angles; ++k) {
    kinds[static_cast<size_t>(angle_start + k)] = ParamKind::kAngle;
  }
  return kinds;
}

GeneralizedExtremeChannel build(const AnsatzSpec& spec) {
  const Index expected = param_count(spec.family, spec.n, spec.m);
  if (spec.params.size() != expected) {
    std::ostringstream os;
    os << "build: family " << static_cast<int>(spec.family) << " shape (" << spec.n << ","
       << spec.m << ") expects " << expected << " parameters, got " << spec.params.size();
    throw std::invalid_argument(os.str());
  }
  std::vector<ComplexMatrix> kraus;
  switch (spec.family) {
    case AnsatzFamily::kI:
      kraus = build_family_i(spec.n, spec.m, spec.params, true);
      break;
    case AnsatzFamily::kII:
      kraus = build_family_i(spec.n, spec.m, spec.params, false);
      break;
    case AnsatzFamily::kIII:
      kraus = build_family_iii(spec.n, spec.m, spec.params);
      break;
  }
  return {QuantumChannel(spec.n, spec.m, std::move(kraus), 1e-12), spec};
}

Index gate_cost(Index n, Index m) {
  if (n == m) return n * (n + 2) * (n - 1);
  return n * n * m;
}

ExtremalityReport linear_independence_certificate(const GeneralizedExtremeChannel& g) {
  return classify_extremality(g.channel);
}

}  // namespace chandecomp
