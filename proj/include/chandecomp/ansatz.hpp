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

#include <vector>

#include "chandecomp/channel.hpp"
#include "chandecomp/types.hpp"

namespace chandecomp {

/// The three generalized-extreme channel families:
///   I   - cosine-sine circuit forms, one closed-form recipe per shape;
///   II  - family I with the inner (ancilla-controlled) rotations removed;
///   III - shared posterior rotation with a shift-multiplexer core.
enum class AnsatzFamily : int { kI = 1, kII = 2, kIII = 3 };

/// One generalized extreme (n,m)-channel, defined by a family tag and a flat
/// real parameter vector. Layout (fixed, serialization-portable):
///   [prior SU(n) coefficients | angle blocks | inner SU blocks | posterior SU
///   blocks], with families II/III having no inner block. Angle entries are
/// radians; SU entries are generator coefficients for param_unitary.
struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::kI;
  Index n = 2;
  Index m = 2;
  RealVector params;
};

struct GeneralizedExtremeChannel {
  QuantumChannel channel;
  AnsatzSpec spec;
};

enum class ParamKind { kAngle, kSuCoefficient };

bool family_supports(AnsatzFamily family, Index n, Index m);

/// Parameter count for one generalized extreme component. The full
/// decomposition problem uses m * param_count + (m-1) simplex parameters.
Index param_count(AnsatzFamily family, Index n, Index m);

/// Per-index parameter kinds in layout order (used to pick sensible random
/// initialization ranges).
std::vector<ParamKind> param_kinds(AnsatzFamily family, Index n, Index m);

/// Builds the n Kraus operators of shape m x n from the closed forms. Trace
/// preservation holds to machine precision by construction (cosine/sine
/// identities and unitarity of the factors); no renormalization happens.
GeneralizedExtremeChannel build(const AnsatzSpec& spec);

/// Primary-gate count of the circuit: d(d+2)(d-1) for n == m == d, and the
/// order-level proxy n^2 m for dimension-altering shapes.
Index gate_cost(Index n, Index m);

/// Extremality check of a built component (delegates to classify_extremality).
ExtremalityReport linear_independence_certificate(const GeneralizedExtremeChannel& g);

}  // namespace chandecomp
