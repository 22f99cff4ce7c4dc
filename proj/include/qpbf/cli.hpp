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

#ifndef QPBF_CLI_HPP_
#define QPBF_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpbf/families.hpp"
#include "qpbf/search.hpp"

namespace qpbf {

// Subcommand implementations behind the CLI front end, kept independent of
// the argument parser so they can be exercised directly in tests. Each
// returns a process exit code and writes human output to `out` / `err`.

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;          // bad arguments or malformed input
inline constexpr int kCheckFailed = 2;    // a verification check failed
inline constexpr int kInfeasible = 3;     // exact mode past its threshold
}  // namespace exit_code

struct GenerateArgs {
  Family family = Family::kF;
  int n = 2;
  MMode m_mode = MMode::kExact;
  int exact_threshold = kDefaultExactThreshold;
  std::string out_path;  // empty: write the instance text to `out`
};
int cmd_generate(const GenerateArgs& args, std::ostream& out,
                 std::ostream& err);

struct RunArgs {
  std::string instance_path;
  PivotRule rule;
  std::uint64_t step_limit = 0;  // 0: default_step_limit(n)
  std::string trace_out;         // empty: no trace file
};
int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);

enum class VerifyScope {
  kReachability,  // BFS from the origin: sole reachable sink is all-ones
  kClaims,        // kC1..kC8
  kTable,         // the six derivative-sign columns
  kGreedy,        // tie-free greedy run with the predicted endpoint
  kBits,          // coefficient bit growth
};
VerifyScope parse_verify_scope(std::string_view token);

struct VerifyArgs {
  VerifyScope scope = VerifyScope::kReachability;
  int n = 6;  // n_max for kBits
  MMode m_mode = MMode::kExact;
  int exact_threshold = kDefaultExactThreshold;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  Family family = Family::kF;
  int n_min = 2;
  int n_max = 10;
  std::vector<PivotRule> rules;  // empty: first_ascending
  MMode m_mode = MMode::kBound;
  int exact_threshold = kDefaultExactThreshold;
  std::uint64_t step_limit = 0;
  std::string csv_out;  // empty: write CSV to `out`
};
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace qpbf

#endif  // QPBF_CLI_HPP_
