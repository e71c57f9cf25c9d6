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
#include <iosfwd>
#include <string>
#include <vector>

#include "chandecomp/types.hpp"

namespace chandecomp::cli {

// Exit codes, stable for scripting: 0 success / threshold met, 1 threshold
// missed, 2 usage error, 3 I/O or parse error.
inline constexpr int kOk = 0;
inline constexpr int kThresholdMissed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kIoError = 3;

struct GenArgs {
  Index n = 2, m = 2;
  Index rank = 0;  // 0 means full rank n*m
  std::uint64_t seed = 0;
  std::string out;
};
int cmd_gen(const GenArgs& args, std::ostream& os, std::ostream& err);

struct DecomposeArgs {
  std::string channel_path;
  int family = 1;
  int starts = 20;
  int components = 0;  // 0: default m
  long max_evals = 50000;
  double target_error = 1e-5;
  std::uint64_t seed = 0;
  std::string out;
  bool refine = false;
};
int cmd_decompose(const DecomposeArgs& args, std::ostream& os, std::ostream& err);

struct ClassifyArgs {
  std::string channel_path;
  bool as_json = false;
};
int cmd_classify(const ClassifyArgs& args, std::ostream& os, std::ostream& err);

struct VerifyArgs {
  std::string result_path;
  std::string channel_path;
  double tolerance = 1e-9;
};
int cmd_verify(const VerifyArgs& args, std::ostream& os, std::ostream& err);

struct BenchArgs {
  std::vector<std::pair<Index, Index>> shapes;
  std::vector<int> families;
  int channels_per_shape = 0;
  int starts = 20;
  long max_evals = 50000;
  double target_error = 1e-5;
  std::uint64_t seed = 0;
  std::string csv_out;  // empty: stdout
};
int cmd_bench(const BenchArgs& args, std::ostream& os, std::ostream& err);

/// "2x2,3x2" -> {(2,2),(3,2)}; also accepts "2,2;3,2".
std::vector<std::pair<Index, Index>> parse_shapes(const std::string& text);

}  // namespace chandecomp::cli
