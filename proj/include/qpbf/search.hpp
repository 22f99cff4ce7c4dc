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

#ifndef QPBF_SEARCH_HPP_
#define QPBF_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/families.hpp"
#include "qpbf/function.hpp"
#include "qpbf/vertex.hpp"

namespace qpbf {

enum class PivotKind {
  kFirstImprovement,   // first improving index in scan order
  kBestImprovement,    // maximum gain
  kWorstImprovement,   // minimum positive gain
  kRandomImprovement,  // uniform among improving indices
};

enum class TieBreak { kLowestIndex, kHighestIndex, kRandom };

/// A deterministic-by-construction pivot rule. For kFirstImprovement the
/// tie_break selects the scan order (kLowestIndex scans 1..n ascending,
/// kHighestIndex descending). kRandom tie-breaking and kRandomImprovement
/// draw from a SplitMix64 stream seeded with `seed`, so a (rule, seed, start)
/// triple always reproduces the same run.
struct PivotRule {
  PivotKind kind = PivotKind::kFirstImprovement;
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t seed = 0;

  static PivotRule first_ascending();
  static PivotRule first_descending();
  static PivotRule best(TieBreak tie_break = TieBreak::kLowestIndex,
                        std::uint64_t seed = 0);
  static PivotRule worst();
  static PivotRule random(std::uint64_t seed);

  friend bool operator==(const PivotRule&, const PivotRule&) = default;
};

/// Throws std::invalid_argument on meaningless combinations
/// (e.g. worst-improvement with random tie-breaking).
void validate(const PivotRule& rule);

/// Canonical token, one of: first-ascending, first-descending, best-lowest,
/// best-highest, best-random, worst-lowest, random.
std::string rule_name(const PivotRule& rule);
PivotRule parse_rule(std::string_view token, std::uint64_t seed = 0);

enum class Terminated { kLocalMax, kStepLimit };

struct TraceStep {
  int flipped_index = 0;
  Coeff gain;         // strictly positive
  Coeff value_after;  // f at the vertex reached by this step
};

/// Full record of one local-search run. tie_events lists the 1-based step
/// numbers at which two or more improving moves attained the gain the rule
/// selected (the certificate that a rule choice actually mattered there).
struct Trace {
  PivotRule rule;
  Vertex start;
  std::vector<TraceStep> steps;
  Vertex end;
  Terminated terminated = Terminated::kLocalMax;
  std::vector<std::uint64_t> tie_events;
};

/// 2^(ceil(n/4) + 8): comfortably above the longest run any rule performs on
/// either family at size n, yet small enough to catch a runaway loop.
std::uint64_t default_step_limit(int n);

/// Runs strictly-improving single-flip local search from `start` until a
/// local maximum or the step limit (0 means default_step_limit). Each step
/// flips exactly one variable with positive gain, chosen by `rule`.
Trace run_search(const QpbFunction& f, const Vertex& start,
                 const PivotRule& rule, std::uint64_t step_limit = 0);

struct StepCountRow {
  int n = 0;
  PivotRule rule;
  std::uint64_t steps = 0;
  Vertex end;
};

/// Builds family members at the given sizes and runs every rule on each,
/// always starting from the origin. Rows are ordered by size, then by the
/// order of `rules`.
std::vector<StepCountRow> step_count_table(Family family,
                                           const std::vector<int>& sizes,
                                           const std::vector<PivotRule>& rules,
                                           MMode mode,
                                           std::uint64_t step_limit = 0);

/// SplitMix64: the 64-bit mixer from Steele, Lea & Flood's SplittableRandom.
/// Tiny, well studied, and trivially reproducible across platforms, which is
/// all the randomized pivot rules need.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace qpbf

#endif  // QPBF_SEARCH_HPP_
