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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chandecomp/cli.hpp"

namespace cli = chandecomp::cli;

int main(int argc, char** argv) {
  CLI::App app{"chandecomp: dimension-altering quantum channel decomposition"};
  app.require_subcommand(1);

  cli::GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random channel file");
  gen_cmd->add_option("--n", gen.n, "input dimension")->required();
  gen_cmd->add_option("--m", gen.m, "output dimension")->required();
  gen_cmd->add_option("--rank", gen.rank, "Kraus rank (default n*m)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  cli::DecomposeArgs dec;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "decompose a channel file");
  dec_cmd->add_option("--channel", dec.channel_path, "channel JSON path")->required();
  dec_cmd->add_option("--family", dec.family, "ansatz family {1,2,3}")->default_val(1);
  dec_cmd->add_option("--starts", dec.starts, "independent optimizer starts")->default_val(20);
  dec_cmd->add_option("--components", dec.components, "mixture components (default m)");
  dec_cmd->add_option("--max-evals", dec.max_evals, "objective evaluations per start")
      ->default_val(50000);
  dec_cmd->add_option("--target-error", dec.target_error, "stop below this Choi trace distance")
      ->default_val(1e-5);
  dec_cmd->add_option("--seed", dec.seed, "RNG seed");
  dec_cmd->add_option("--out", dec.out, "result JSON path");
  dec_cmd->add_flag("--refine", dec.refine, "per-component coordinate refinement pass");

  cli::ClassifyArgs cls;
  CLI::App* cls_cmd = app.add_subcommand("classify", "extremality classification");
  cls_cmd->add_option("--channel", cls.channel_path, "channel JSON path")->required();
  cls_cmd->add_flag("--json", cls.as_json, "machine-readable output");

  cli::VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "recompute a stored decomposition");
  ver_cmd->add_option("--result", ver.result_path, "result JSON path")->required();
  ver_cmd->add_option("--channel", ver.channel_path, "target channel JSON path")->required();
  ver_cmd->add_option("--tolerance", ver.tolerance, "allowed error drift")->default_val(1e-9);

  cli::BenchArgs bench;
  std::string shapes_text;
  std::string families_text = "1,2,3";
  CLI::App* bench_cmd = app.add_subcommand("bench", "Table-style benchmark CSV");
  bench_cmd->add_option("--shapes", shapes_text, "shape list, e.g. 2x2,2x3,3x2");
  bench_cmd->add_option("--families", families_text, "family list, e.g. 1,2,3")->capture_default_str();
  bench_cmd->add_option("--channels", bench.channels_per_shape, "random channels per shape")
      ->default_val(0);
  bench_cmd->add_option("--starts", bench.starts, "optimizer starts")->default_val(20);
  bench_cmd->add_option("--max-evals", bench.max_evals, "evaluations per start")->default_val(50000);
  bench_cmd->add_option("--target-error", bench.target_error, "early-stop error")->default_val(1e-5);
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--out", bench.csv_out, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsageError;
  }

  try {
    if (gen_cmd->parsed()) return cli::cmd_gen(gen, std::cout, std::cerr);
    if (dec_cmd->parsed()) return cli::cmd_decompose(dec, std::cout, std::cerr);
    if (cls_cmd->parsed()) return cli::cmd_classify(cls, std::cout, std::cerr);
    if (ver_cmd->parsed()) return cli::cmd_verify(ver, std::cout, std::cerr);
    if (bench_cmd->parsed()) {
      for (size_t start = 0, pos = 0; pos <= families_text.size(); ++pos) {
        if (pos == families_text.size() || families_text[pos] == ',') {
          if (pos > start) bench.families.push_back(std::stoi(families_text.substr(start, pos - start)));
          start = pos + 1;
        }
      }
      bench.shapes = cli::parse_shapes(shapes_text);
      return cli::cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return cli::kIoError;
  }
  return cli::kUsageError;
}
