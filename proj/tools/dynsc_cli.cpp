// Copyright 2026 The dynsc Authors
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

// dynsc: replay, verify, benchmark and generate set-cover update streams.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 invariant violation,
// 3 ratio violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dynsc/errors.hpp"
#include "dynsc/runner.hpp"
#include "dynsc/stream.hpp"
#include "dynsc/verifier.hpp"
#include "dynsc/workload.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitRatio = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dynsc::Error(dynsc::ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_ratio_violation(const dynsc::Violation& v) {
  return v.invariant == "ratio" || v.invariant == "certificate" || v.invariant == "weak-duality" ||
         v.invariant == "opt-upper";
}

int exit_code_for(const dynsc::VerifierReport& report) {
  if (report.pass) return kExitOk;
  for (const auto& v : report.violations) {
    if (!is_ratio_violation(v)) return kExitInvariant;
  }
  return kExitRatio;
}

dynsc::NumericMode parse_mode(const std::string& name) {
  if (name == "exact" || name == "exact-rational") return dynsc::NumericMode::kExactRational;
  return dynsc::NumericMode::kFastFloat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic weighted set cover: stream replay, verification and benchmarks"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  std::string mode = "fast-float";
  bool implicit_sets = false;
  std::int64_t verify_every = 0;
  bool async_verify = false;
  int reps = 3;
  const std::vector<std::string> modes = {"fast-float", "float", "exact-rational", "exact"};

  auto* run = app.add_subcommand("run", "Replay a stream and emit one JSON line per event");
  run->add_option("input", input, "Stream file, or - for stdin");
  run->add_option("-o,--output", output, "Write JSONL here instead of stdout");
  run->add_option("--mode", mode, "Numeric mode")->check(CLI::IsMember(modes));
  run->add_flag("--implicit-sets", implicit_sets, "Declare unknown sets with cost 1");
  run->add_option("--verify-every", verify_every, "Check invariants every N updates")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--async-verify", async_verify, "Run snapshot checks on worker threads");

  auto* verify = app.add_subcommand("verify", "Replay in exact mode and check every update");
  verify->add_option("input", input, "Stream file, or - for stdin");
  verify->add_flag("--implicit-sets", implicit_sets, "Declare unknown sets with cost 1");
  verify->add_flag("--async-verify", async_verify, "Run snapshot checks on worker threads");

  auto* bench = app.add_subcommand("bench", "Time a stream and report work per update as TSV");
  bench->add_option("input", input, "Stream file, or - for stdin");
  bench->add_option("--reps", reps, "Repetitions; wall-clock is the median")
      ->check(CLI::PositiveNumber);
  bench->add_option("--mode", mode, "Numeric mode")->check(CLI::IsMember(modes));
  bench->add_flag("--implicit-sets", implicit_sets, "Declare unknown sets with cost 1");

  dynsc::WorkloadParams params;
  std::string profile = "random-churn";
  std::string eps = "1/10";
  std::string cost_ratio = "1";
  auto* gen = app.add_subcommand("gen", "Generate a deterministic update stream");
  gen->add_option("--profile", profile, "Workload profile")
      ->check(CLI::IsMember(dynsc::profile_names()));
  gen->add_option("--seed", params.seed, "Random seed");
  gen->add_option("-n,--n", params.n, "Capacity (max live elements)")->check(CLI::PositiveNumber);
  gen->add_option("-m,--m", params.m, "Number of sets")->check(CLI::PositiveNumber);
  gen->add_option("-f,--f", params.f, "Max sets per element")->check(CLI::PositiveNumber);
  gen->add_option("--ops", params.ops, "Element updates (0 = profile default)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--eps", eps, "Epsilon as p/q");
  gen->add_option("--C", cost_ratio, "Cost ratio bound C");
  gen->add_option("-o,--output", output, "Write the stream here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "Compare the final cover against brute-force OPT");
  oracle->add_option("input", input, "Stream file, or - for stdin");
  oracle->add_option("--mode", mode, "Numeric mode")->check(CLI::IsMember(modes));
  oracle->add_flag("--implicit-sets", implicit_sets, "Declare unknown sets with cost 1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      params.profile = dynsc::parse_profile(profile);
      auto e = dynsc::parse_fraction(eps);
      auto c = dynsc::parse_decimal(cost_ratio);
      if (!e || !c) {
        std::cerr << "error: --eps must be p/q and --C a decimal\n";
        return kExitUsage;
      }
      params.epsilon = *e;
      params.cost_ratio = *c;
      const std::string text = dynsc::render(dynsc::gen(params));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
      return kExitOk;
    }

    const dynsc::Stream stream = dynsc::parse_stream(read_input(input));

    if (bench->parsed()) {
      auto result = dynsc::bench(stream, reps, parse_mode(mode), implicit_sets);
      dynsc::write_bench_tsv(result, stream, std::cout);
      return kExitOk;
    }

    dynsc::RunOptions options;
    options.implicit_sets = implicit_sets;
    options.async_verify = async_verify;
    if (run->parsed()) {
      options.mode = parse_mode(mode);
      options.verify_every = verify_every;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!output.empty()) {
        file.open(output, std::ios::binary);
        out = &file;
      }
      auto summary = dynsc::run(stream, options, out);
      if (!summary.report.pass) {
        std::cerr << dynsc::serialize(summary.report);
        return exit_code_for(summary.report);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      options.mode = dynsc::NumericMode::kExactRational;
      options.verify_every = 1;
      options.certify = true;
      auto summary = dynsc::run(stream, options, nullptr);
      std::cout << dynsc::serialize(summary.report);
      if (summary.first_failure) std::cout << "first_failure op=" << *summary.first_failure << '\n';
      return exit_code_for(summary.report);
    }
    if (oracle->parsed()) {
      options.mode = parse_mode(mode);
      options.brute_force_final = true;
      auto summary = dynsc::run(stream, options, nullptr);
      std::cout << dynsc::serialize(summary.report);
      return exit_code_for(summary.report);
    }
  } catch (const dynsc::RunError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dynsc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
