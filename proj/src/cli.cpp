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

#include "chandecomp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "chandecomp/serialize.hpp"

namespace chandecomp::cli {

namespace {

AnsatzFamily family_from_int(int f) {
  if (f < 1 || f > 3) {
    throw std::invalid_argument("family must be 1, 2 or 3");
  }
  return static_cast<AnsatzFamily>(f);
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::vector<std::pair<Index, Index>> parse_shapes(const std::string& text) {
  std::vector<std::pair<Index, Index>> shapes;
  if (text.empty()) return shapes;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, token.npos != text.find(';') ? ';' : ',')) {
    if (token.empty()) continue;
    const auto sep = token.find_first_of("x,");
    if (sep == std::string::npos) {
      throw std::invalid_argument("bad shape token '" + token + "', expected like 2x3");
    }
    shapes.emplace_back(std::stol(token.substr(0, sep)), std::stol(token.substr(sep + 1)));
  }
  return shapes;
}

int cmd_gen(const GenArgs& args, std::ostream& os, std::ostream& err) {
  try {
    if (args.n < 1 || args.m < 1) {
      err << "gen: dimensions must be positive\n";
      return kUsageError;
    }
    std::mt19937_64 rng(args.seed);
    // The (n,1) set is a single point, so m=1 ignores the rank flag.
    const QuantumChannel ch = (args.m == 1)
                                  ? trace_channel(args.n)
                                  : random_channel(args.n, args.m,
                                                   args.rank > 0 ? args.rank : args.n * args.m, rng);
    const std::string text = channel_to_json(ch).dump(2) + "\n";
    if (args.out.empty()) {
      os << text;
    } else {
      write_text_file(args.out, text);
      os << "wrote " << args.out << " (n=" << ch.input_dim() << " m=" << ch.output_dim()
         << " rank=" << ch.kraus().size() << " checksum=" << channel_checksum(ch) << ")\n";
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "gen: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "gen: " << e.what() << "\n";
    return kIoError;
  }
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& os, std::ostream& err) {
  QuantumChannel target = trace_channel(1);  // placeholder, replaced below
  try {
    target = load_channel(args.channel_path);
  } catch (const std::exception& e) {
    err << "decompose: " << e.what() << "\n";
    return kIoError;
  }
  try {
    DecompositionProblem problem{std::move(target), family_from_int(args.family)};
    problem.components = args.components;
    problem.starts = args.starts;
    problem.max_evals_per_start = args.max_evals;
    problem.target_error = args.target_error;
    problem.seed = args.seed;
    problem.refine_components = args.refine;

    const DecompositionResult result = decompose(problem);
    os << "error=" << format_double(result.achieved_error)
       << " bound=" << format_double(result.diamond_upper_bound) << " evals=" << result.evals_used
       << " starts=" << result.per_start_errors.size() << "\n";
    if (!args.out.empty()) {
      write_text_file(args.out, result_to_json(result, problem).dump(2) + "\n");
    }
    return result.achieved_error < args.target_error ? kOk : kThresholdMissed;
  } catch (const capability_error& e) {
    err << "decompose: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "decompose: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "decompose: " << e.what() << "\n";
    return kIoError;
  }
}

int cmd_classify(const ClassifyArgs& args, std::ostream& os, std::ostream& err) {
  try {
    const QuantumChannel ch = load_channel(args.channel_path);
    const ExtremalityReport rep = classify_extremality(ch);
    if (args.as_json) {
      nlohmann::ordered_json j;
      j["n"] = ch.input_dim();
      j["m"] = ch.output_dim();
      j["kraus_rank"] = rep.kraus_rank;
      j["gram_rank"] = rep.gram_rank;
      j["classification"] = to_string(rep.classification);
      j["tolerance_used"] = rep.tolerance_used;
      os << j.dump(2) << "\n";
    } else {
      os << to_string(rep.classification) << ", rank " << rep.kraus_rank << " (gram rank "
         << rep.gram_rank << " of " << rep.kraus_rank * rep.kraus_rank << ", tolerance "
         << rep.tolerance_used << ")\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    err << "classify: " << e.what() << "\n";
    return kIoError;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& os, std::ostream& err) {
  LoadedResult loaded;
  QuantumChannel target = trace_channel(1);
  try {
    loaded = result_from_json(nlohmann::json::parse(read_text_file(args.result_path)));
    target = load_channel(args.channel_path);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kIoError;
  }
  try {
    if (!loaded.target_checksum.empty() &&
        loaded.target_checksum != channel_checksum(target)) {
      err << "verify: target checksum mismatch\n";
      return kThresholdMissed;
    }
    const DistanceReport rep = verify(loaded.result, target);
    const double drift = std::abs(rep.trace_distance - loaded.result.achieved_error);
    os << "recomputed_error=" << format_double(rep.trace_distance)
       << " stored_error=" << format_double(loaded.result.achieved_error)
       << " drift=" << format_double(drift)
       << " bound=" << format_double(rep.diamond_upper_bound) << "\n";
    return drift <= args.tolerance ? kOk : kThresholdMissed;
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << "\n";
    return kIoError;
  }
}

int cmd_bench(const BenchArgs& args, std::ostream& os, std::ostream& err) {
  std::ostringstream csv;
  csv << "shape,family,param_count_total,min_error,median_error,max_error,mean_evals,"
         "wall_time_s\n";
  try {
    for (const auto& [n, m] : args.shapes) {
      for (const int fam_int : args.families) {
        const AnsatzFamily family = family_from_int(fam_int);
        const std::string shape = std::to_string(n) + "x" + std::to_string(m);
        if (!family_supports(family, n, m)) {
          err << "bench: skipping unsupported combination shape " << shape << " family "
              << fam_int << "\n";
          csv << shape << "," << fam_int << ",,,,,,\n";
          continue;
        }
        const Index total = static_cast<Index>(m) * param_count(family, n, m) + (m - 1);
        std::vector<double> errors;
        double mean_evals = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        for (int c = 0; c < args.channels_per_shape; ++c) {
          std::mt19937_64 rng(args.seed + static_cast<std::uint64_t>(1000 * c));
          DecompositionProblem problem{random_channel(n, m, n * m, rng), family};
          problem.starts = args.starts;
          problem.max_evals_per_start = args.max_evals;
          problem.target_error = args.target_error;
          problem.seed = args.seed + static_cast<std::uint64_t>(c);
          const DecompositionResult r = decompose(problem);
          errors.push_back(r.achieved_error);
          mean_evals += static_cast<double>(r.evals_used);
        }
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        csv << shape << "," << fam_int << "," << total << ",";
        if (errors.empty()) {
          csv << ",,,,";
        } else {
          mean_evals /= static_cast<double>(errors.size());
          csv << format_double(*std::min_element(errors.begin(), errors.end())) << ","
              << format_double(median(errors)) << ","
              << format_double(*std::max_element(errors.begin(), errors.end())) << ","
              << format_double(mean_evals) << ",";
        }
        csv << format_double(wall) << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "bench: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << "\n";
    return kIoError;
  }
  try {
    if (args.csv_out.empty()) {
      os << csv.str();
    } else {
      write_text_file(args.csv_out, csv.str());
      os << "wrote " << args.csv_out << "\n";
    }
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace chandecomp::cli
