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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "chandecomp/decompose.hpp"
#include "chandecomp/matgen.hpp"
#include "chandecomp/serialize.hpp"
#include "test_util.hpp"

using namespace chandecomp;

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

void report(int criterion, const char* label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label,
              detail.c_str());
  std::fflush(stdout);
}

std::string run_cli_capture(const std::string& args, int* exit_code) {
  const std::string cmd = std::string(CHANDECOMP_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::vector<double> decompose_random_channels(Index n, Index m, Index rank, AnsatzFamily family,
                                              int channels, int starts, long max_evals,
                                              double target_error, std::uint64_t seed) {
  std::vector<double> errors;
  for (int c = 0; c < channels; ++c) {
    std::mt19937_64 gen(seed + static_cast<std::uint64_t>(1000 * c));
    DecompositionProblem problem{random_channel(n, m, rank, gen), family};
    problem.starts = starts;
    problem.max_evals_per_start = max_evals;
    problem.target_error = target_error;
    problem.seed = seed + static_cast<std::uint64_t>(c);
    errors.push_back(decompose(problem).achieved_error);
  }
  return errors;
}

struct PlantedStats {
  double median_error = 1.0;
};

PlantedStats planted_recovery(AnsatzFamily family, Index n, Index m, int targets, int starts,
                              long max_evals, std::uint64_t seed) {
  std::vector<double> errors;
  const int components = static_cast<int>(m);
  const Index per = param_count(family, n, m);
  for (int t = 0; t < targets; ++t) {
    std::mt19937_64 gen(seed + static_cast<std::uint64_t>(131 * t));
    RealVector flat(components - 1 + components * per);
    std::uniform_real_distribution<double> simplex(0.6, 1.4);
    for (int i = 0; i + 1 < components; ++i) flat(i) = simplex(gen);
    for (int c = 0; c < components; ++c) {
      flat.segment(components - 1 + c * per, per) = test::random_params(family, n, m, gen);
    }
    const DecodedMixture mix = decode_mixture(family, n, m, components, flat);
    std::vector<QuantumChannel> parts;
    for (const auto& spec : mix.specs) parts.push_back(build(spec).channel);
    DecompositionProblem problem{convex_combine(parts, mix.probs), family};
    problem.starts = starts;
    problem.max_evals_per_start = max_evals;
    problem.target_error = 1e-7;
    problem.seed = seed + static_cast<std::uint64_t>(7 * t + 1);
    errors.push_back(decompose(problem).achieved_error);
  }
  return {median_of(errors)};
}

}  // namespace

TEST_CASE("criterion 1: parameter-count table, families I and II") {
  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  const std::string csv = run_cli_capture(
      "bench --shapes 2x2,2x3,3x2,3x3,2x4,4x2,4x4 --families 1,2,3 --channels 0", &code);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::vector<std::pair<std::string, int>> expected = {
      {"2x2,1,", 23},  {"2x3,1,", 65},  {"3x2,1,", 55},  {"3x3,1,", 140}, {"2x4,1,", 183},
      {"4x2,1,", 95},  {"4x4,1,", 471}, {"2x2,2,", 23},  {"2x3,2,", 65},  {"3x2,2,", 43},
      {"3x3,2,", 116}, {"2x4,2,", 159}, {"4x2,2,", 71},  {"4x4,2,", 351}, {"2x2,3,", 17},
  };
  bool pass = (code == 0) && wall < 1.0;
  std::string missing;
  for (const auto& [prefix, value] : expected) {
    const std::string needle = prefix + std::to_string(value) + ",";
    if (csv.find(needle) == std::string::npos) {
      pass = false;
      missing += needle + " ";
    }
  }
  report(1, "parameter counts match the reference table", pass,
         missing.empty() ? "all 15 entries exact, " + std::to_string(wall) + "s"
                         : "missing: " + missing);
  CHECK(pass);
}

TEST_CASE("criterion 7: circuit cost formula") {
  const bool pass = gate_cost(2, 2) == 8 && gate_cost(3, 3) == 30 && gate_cost(4, 4) == 72;
  report(7, "gate_cost(d,d) = 8, 30, 72", pass, "exact integers");
  CHECK(pass);
}
