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

#include "chandecomp/serialize.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chandecomp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kChannelFormatVersion = 1;
constexpr int kResultFormatVersion = 1;
constexpr const char* kParamLayout = "prior-angles-inner-posterior/v1";

std::string format_entry(double re, double im) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g %.17g;", re, im);
  return buf;
}

}  // namespace

std::string channel_checksum(const QuantumChannel& ch) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (const char c : s) {
      h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
      h *= 0x100000001b3ULL;
    }
  };
  feed(std::to_string(ch.input_dim()) + "," + std::to_string(ch.output_dim()) + ";");
  for (const auto& k : ch.kraus()) {
    for (Index a = 0; a < k.rows(); ++a) {
      for (Index i = 0; i < k.cols(); ++i) {
        feed(format_entry(k(a, i).real(), k(a, i).imag()));
      }
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016" PRIx64, h);
  return buf;
}

ordered_json channel_to_json(const QuantumChannel& ch) {
  ordered_json j;
  j["format_version"] = kChannelFormatVersion;
  j["n"] = ch.input_dim();
  j["m"] = ch.output_dim();
  ordered_json kraus = ordered_json::array();
  for (const auto& k : ch.kraus()) {
    ordered_json mat = ordered_json::array();
    for (Index a = 0; a < k.rows(); ++a) {
      ordered_json row = ordered_json::array();
      for (Index i = 0; i < k.cols(); ++i) {
        row.push_back(ordered_json::array({k(a, i).real(), k(a, i).imag()}));
      }
      mat.push_back(std::move(row));
    }
    kraus.push_back(std::move(mat));
  }
  j["kraus"] = std::move(kraus);
  return j;
}

QuantumChannel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("format_version") || !j.contains("n") || !j.contains("m") ||
      !j.contains("kraus")) {
    throw std::runtime_error("channel file: missing one of format_version/n/m/kraus");
  }
  if (j.at("format_version").get<int>() != kChannelFormatVersion) {
    throw std::runtime_error("channel file: unsupported format_version");
  }
  const Index n = j.at("n").get<Index>();
  const Index m = j.at("m").get<Index>();
  std::vector<ComplexMatrix> kraus;
  for (const auto& mat : j.at("kraus")) {
    const Index rows = static_cast<Index>(mat.size());
    if (rows == 0) throw std::runtime_error("channel file: empty Kraus matrix");
    const Index cols = static_cast<Index>(mat.at(0).size());
    ComplexMatrix k(rows, cols);
    for (Index a = 0; a < rows; ++a) {
      const auto& row = mat.at(static_cast<size_t>(a));
      if (static_cast<Index>(row.size()) != cols) {
        throw std::runtime_error("channel file: ragged Kraus matrix");
      }
      for (Index i = 0; i < cols; ++i) {
        const auto& entry = row.at(static_cast<size_t>(i));
        if (entry.size() != 2) throw std::runtime_error("channel file: entry is not [re, im]");
        k(a, i) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    kraus.push_back(std::move(k));
  }
  const CptpReport rep = validate_cptp(kraus, n, m);
  if (!rep.accepted) {
    throw std::runtime_error("channel file: not CPTP (" + rep.message + ")");
  }
  return QuantumChannel(n, m, std::move(kraus), 1e-8);
}

ordered_json result_to_json(const DecompositionResult& result,
                            const DecompositionProblem& problem) {
  ordered_json j;
  j["format_version"] = kResultFormatVersion;
  j["target_checksum"] = channel_checksum(problem.target);
  j["family"] = static_cast<int>(problem.family);
  j["n"] = problem.target.input_dim();
  j["m"] = problem.target.output_dim();
  j["components"] = problem.effective_components();
  j["param_layout"] = kParamLayout;
  j["probs"] = std::vector<double>(result.probs.data(), result.probs.data() + result.probs.size());
  ordered_json specs = ordered_json::array();
  for (const auto& spec : result.specs) {
    ordered_json s;
    s["family"] = static_cast<int>(spec.family);
    s["n"] = spec.n;
    s["m"] = spec.m;
    s["params"] = std::vector<double>(spec.params.data(), spec.params.data() + spec.params.size());
    specs.push_back(std::move(s));
  }
  j["specs"] = std::move(specs);
  j["achieved_error"] = result.achieved_error;
  j["diamond_upper_bound"] = result.diamond_upper_bound;
  j["seed"] = problem.seed;
  j["starts"] = problem.starts;
  j["max_evals_per_start"] = problem.max_evals_per_start;
  j["evals_used"] = result.evals_used;
  j["per_start_errors"] = result.per_start_errors;
  j["budget_exhausted"] = result.budget_exhausted;
  return j;
}

LoadedResult result_from_json(const json& j) {
  if (!j.is_object() || j.value("format_version", -1) != kResultFormatVersion) {
    throw std::runtime_error("result file: missing or unsupported format_version");
  }
  if (j.value("param_layout", "") != kParamLayout) {
    throw std::runtime_error("result file: unknown parameter layout tag");
  }
  LoadedResult out;
  const auto probs = j.at("probs").get<std::vector<double>>();
  out.result.probs = Eigen::Map<const RealVector>(probs.data(), static_cast<Index>(probs.size()));
  for (const auto& s : j.at("specs")) {
    AnsatzSpec spec;
    spec.family = static_cast<AnsatzFamily>(s.at("family").get<int>());
    spec.n = s.at("n").get<Index>();
    spec.m = s.at("m").get<Index>();
    const auto params = s.at("params").get<std::vector<double>>();
    spec.params = Eigen::Map<const RealVector>(params.data(), static_cast<Index>(params.size()));
    out.result.specs.push_back(std::move(spec));
  }
  out.result.achieved_error = j.at("achieved_error").get<double>();
  out.result.diamond_upper_bound = j.at("diamond_upper_bound").get<double>();
  out.result.evals_used = j.value("evals_used", 0L);
  out.result.per_start_errors = j.value("per_start_errors", std::vector<double>{});
  out.result.budget_exhausted = j.value("budget_exhausted", false);
  out.seed = j.value("seed", std::uint64_t{0});
  out.starts = j.value("starts", 0);
  out.max_evals_per_start = j.value("max_evals_per_start", 0L);
  out.target_checksum = j.value("target_checksum", "");
  return out;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << contents;
  if (!os) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

QuantumChannel load_channel(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  try {
    return channel_from_json(j);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed channel file " + path + ": " + e.what());
  }
}

}  // namespace chandecomp
