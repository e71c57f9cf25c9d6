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

#include <cstdint>
#include <string>

#include <json.hpp>

#include "chandecomp/decompose.hpp"

namespace chandecomp {

/// Channel file (format_version 1): {format_version, n, m, kraus}, each Kraus
/// operator a rows x cols array of [re, im] pairs in row-major order. Loading
/// validates CPTP at 1e-8 and reports the residuals on rejection.
nlohmann::ordered_json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const nlohmann::json& j);

/// Result file (format_version 1): self-contained record of one decomposition
/// (target checksum, family, probabilities, per-component parameter vectors
/// with a layout tag, achieved error, bound, seed and budgets).
nlohmann::ordered_json result_to_json(const DecompositionResult& result,
                                      const DecompositionProblem& problem);

struct LoadedResult {
  DecompositionResult result;
  std::uint64_t seed = 0;
  int starts = 0;
  long max_evals_per_start = 0;
  std::string target_checksum;
};
LoadedResult result_from_json(const nlohmann::json& j);

/// FNV-1a over the canonically formatted Kraus entries; stable across runs.
std::string channel_checksum(const QuantumChannel& ch);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

QuantumChannel load_channel(const std::string& path);

}  // namespace chandecomp
