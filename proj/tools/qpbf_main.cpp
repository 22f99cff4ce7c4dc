// Copyright 2026 The qpbf Authors
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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpbf/cli.hpp"
#include "qpbf/errors.hpp"
#include "qpbf/families.hpp"
#include "qpbf/search.hpp"

namespace {

// Applies the --rule/--tie-break/--seed flags on top of each other, so both
// `--rule best --tie-break random` and `--rule best-random` work.
qpbf::PivotRule assemble_rule(const std::string& rule_token,
                              const std::string& tie_token,
                              std::uint64_t seed) {
  qpbf::PivotRule rule = qpbf::parse_rule(rule_token, seed);
  if (!tie_token.empty()) {
    if (tie_token == "lowest") {
      rule.tie_break = qpbf::TieBreak::kLowestIndex;
    } else if (tie_token == "highest") {
      rule.tie_break = qpbf::TieBreak::kHighestIndex;
    } else if (tie_token == "random") {
      rule.tie_break = qpbf::TieBreak::kRandom;
    } else {
      throw std::invalid_argument("unknown tie-break: " + tie_token);
    }
  }
  qpbf::validate(rule);
  return rule;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local-search workbench for quadratic pseudo-boolean"
               " functions on the hypercube"};
  app.require_subcommand(1);

  std::string family_token = "f";
  std::string m_mode_token = "exact";
  std::string bench_m_mode_token = "bound";
  std::string rule_token = "first";
  std::string tie_token;
  std::string scope_token;
  std::vector<std::string> bench_rule_tokens;
  std::string out_path;
  std::string trace_path;
  std::string instance_path;
  int n = 2;
  int n_min = 2;
  int n_max = 10;
  int exact_threshold = qpbf::kDefaultExactThreshold;
  std::uint64_t seed = 0;
  std::uint64_t step_limit = 0;

  CLI::App* generate =
      app.add_subcommand("generate", "build a family member and write it");
  generate->add_option("--family", family_token, "f or g (default f)");
  generate->add_option("--n", n, "number of variables (2, 6, 10, ...)")
      ->required();
  generate->add_option("--m-mode", m_mode_token,
                       "exact (brute-force spread, default) or bound "
                       "(coefficient sum)");
  generate->add_option("--exact-threshold", exact_threshold,
                       "largest size whose spread exact mode may brute-force");
  generate->add_option("--out", out_path, "output file (default: stdout)");

  CLI::App* run =
      app.add_subcommand("run", "run local search on an instance file");
  run->add_option("instance", instance_path, "instance file")->required();
  run->add_option("--rule", rule_token,
                  "first|best|worst|random or a combined token like "
                  "best-highest (default first)");
  run->add_option("--tie-break", tie_token, "lowest|highest|random");
  run->add_option("--seed", seed, "seed for randomized rules");
  run->add_option("--step-limit", step_limit, "0 means the default limit");
  run->add_option("--trace", trace_path, "write the run as a trace file");

  CLI::App* verify = app.add_subcommand(
      "verify", "check structural properties of a family member");
  verify->add_option("scope", scope_token,
                     "lemma2|claims|table|greedy|bits")
      ->required();
  verify->add_option("--n", n, "size (n_max for bits)")->required();
  verify->add_option("--m-mode", m_mode_token, "exact (default) or bound");
  verify->add_option("--exact-threshold", exact_threshold,
                     "largest size whose spread exact mode may brute-force");

  CLI::App* bench = app.add_subcommand(
      "bench", "step-count table over a size range, as CSV");
  bench->add_option("--family", family_token, "f or g (default f)");
  bench->add_option("--n-min", n_min, "smallest size (default 2)");
  bench->add_option("--n-max", n_max, "largest size (default 10)");
  bench->add_option("--m-mode", bench_m_mode_token,
                    "exact or bound (default bound)");
  bench->add_option("--rule", bench_rule_tokens,
                    "pivot rule token; repeatable");
  bench->add_option("--seed", seed, "seed for randomized rules");
  bench->add_option("--step-limit", step_limit, "0 means the default limit");
  bench->add_option("--exact-threshold", exact_threshold,
                    "largest size whose spread exact mode may brute-force");
  bench->add_option("--out", out_path, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qpbf::exit_code::kUsage;
  }

  try {
    if (generate->parsed()) {
      qpbf::GenerateArgs args;
      args.family = qpbf::parse_family(family_token);
      args.n = n;
      args.m_mode = qpbf::parse_m_mode(m_mode_token);
      args.exact_threshold = exact_threshold;
      args.out_path = out_path;
      return qpbf::cmd_generate(args, std::cout, std::cerr);
    }
    if (run->parsed()) {
      qpbf::RunArgs args;
      args.instance_path = instance_path;
      args.rule = assemble_rule(rule_token, tie_token, seed);
      args.step_limit = step_limit;
      args.trace_out = trace_path;
      return qpbf::cmd_run(args, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      qpbf::VerifyArgs args;
      args.scope = qpbf::parse_verify_scope(scope_token);
      args.n = n;
      args.m_mode = qpbf::parse_m_mode(m_mode_token);
      args.exact_threshold = exact_threshold;
      return qpbf::cmd_verify(args, std::cout, std::cerr);
    }
    if (bench->parsed()) {
      qpbf::BenchArgs args;
      args.family = qpbf::parse_family(family_token);
      args.n_min = n_min;
      args.n_max = n_max;
      args.m_mode = qpbf::parse_m_mode(bench_m_mode_token);
      args.exact_threshold = exact_threshold;
      args.step_limit = step_limit;
      args.csv_out = out_path;
      for (const std::string& token : bench_rule_tokens) {
        args.rules.push_back(qpbf::parse_rule(token, seed));
      }
      return qpbf::cmd_bench(args, std::cout, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qpbf::exit_code::kUsage;
  }
  std::cerr << "error: no subcommand\n";
  return qpbf::exit_code::kUsage;
}
