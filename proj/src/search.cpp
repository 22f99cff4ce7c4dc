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

#include "qpbf/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qpbf/state.hpp"

namespace qpbf {

PivotRule PivotRule::first_ascending() {
  return {PivotKind::kFirstImprovement, TieBreak::kLowestIndex, 0};
}

PivotRule PivotRule::first_descending() {
  return {PivotKind::kFirstImprovement, TieBreak::kHighestIndex, 0};
}

PivotRule PivotRule::best(TieBreak tie_break, std::uint64_t seed) {
  return {PivotKind::kBestImprovement, tie_break, seed};
}

PivotRule PivotRule::worst() {
  return {PivotKind::kWorstImprovement, TieBreak::kLowestIndex, 0};
}

PivotRule PivotRule::random(std::uint64_t seed) {
  return {PivotKind::kRandomImprovement, TieBreak::kLowestIndex, seed};
}

void validate(const PivotRule& rule) {
  switch (rule.kind) {
    case PivotKind::kFirstImprovement:
    case PivotKind::kWorstImprovement:
      if (rule.tie_break == TieBreak::kRandom) {
        throw std::invalid_argument(
            "random tie-breaking applies to best-improvement only");
      }
      return;
    case PivotKind::kBestImprovement:
      return;
    case PivotKind::kRandomImprovement:
      if (rule.tie_break != TieBreak::kLowestIndex) {
        throw std::invalid_argument(
            "random-improvement does not take a tie-break");
      }
      return;
  }
  throw std::invalid_argument("unknown pivot kind");
}

std::string rule_name(const PivotRule& rule) {
  switch (rule.kind) {
    case PivotKind::kFirstImprovement:
      return rule.tie_break == TieBreak::kHighestIndex ? "first-descending"
                                                       : "first-ascending";
    case PivotKind::kBestImprovement:
      switch (rule.tie_break) {
        case TieBreak::kLowestIndex:
          return "best-lowest";
        case TieBreak::kHighestIndex:
          return "best-highest";
        case TieBreak::kRandom:
          return "best-random";
      }
      break;
    case PivotKind::kWorstImprovement:
      return rule.tie_break == TieBreak::kHighestIndex ? "worst-highest"
                                                       : "worst-lowest";
    case PivotKind::kRandomImprovement:
      return "random";
  }
  throw std::invalid_argument("unknown pivot kind");
}

PivotRule parse_rule(std::string_view token, std::uint64_t seed) {
  PivotRule rule;
  if (token == "first" || token == "first-improvement" ||
      token == "first-ascending") {
    rule = PivotRule::first_ascending();
  } else if (token == "first-descending") {
    rule = PivotRule::first_descending();
  } else if (token == "best" || token == "best-improvement" ||
             token == "best-lowest") {
    rule = PivotRule::best(TieBreak::kLowestIndex);
  } else if (token == "best-highest") {
    rule = PivotRule::best(TieBreak::kHighestIndex);
  } else if (token == "best-random") {
    rule = PivotRule::best(TieBreak::kRandom);
  } else if (token == "worst" || token == "worst-improvement" ||
             token == "worst-lowest") {
    rule = PivotRule::worst();
  } else if (token == "worst-highest") {
    rule = {PivotKind::kWorstImprovement, TieBreak::kHighestIndex, 0};
  } else if (token == "random" || token == "random-improvement") {
    rule = PivotRule::random(seed);
  } else {
    throw std::invalid_argument("unknown pivot rule: " + std::string(token));
  }
  rule.seed = seed;
  return rule;
}

std::uint64_t default_step_limit(int n) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  const int exponent = std::min((n + 3) / 4 + 8, 62);
  return std::uint64_t{1} << exponent;
}

namespace {

// Positions of the selected move within `moves` according to the rule, plus
// how many moves attain the selected gain (>= 2 means the step was a tie).
struct Selection {
  std::size_t pos = 0;
  std::size_t ties_at_gain = 0;
};

Selection select_move(const std::vector<std::pair<int, Coeff>>& moves,
                      const PivotRule& rule, SplitMix64& rng) {
  Selection sel;
  switch (rule.kind) {
    case PivotKind::kFirstImprovement:
      sel.pos = rule.tie_break == TieBreak::kHighestIndex ? moves.size() - 1
                                                          : 0;
      break;
    case PivotKind::kBestImprovement:
    case PivotKind::kWorstImprovement: {
      const bool best = rule.kind == PivotKind::kBestImprovement;
      std::size_t arg = 0;
      for (std::size_t k = 1; k < moves.size(); ++k) {
        if (best ? moves[k].second > moves[arg].second
                 : moves[k].second < moves[arg].second) {
          arg = k;
        }
      }
      if (rule.tie_break == TieBreak::kHighestIndex) {
        for (std::size_t k = moves.size(); k-- > 0;) {
          if (moves[k].second == moves[arg].second) {
            arg = k;
            break;
          }
        }
      } else if (rule.tie_break == TieBreak::kRandom) {
        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < moves.size(); ++k) {
          if (moves[k].second == moves[arg].second) candidates.push_back(k);
        }
        if (candidates.size() > 1) {
          arg = candidates[static_cast<std::size_t>(
              rng.next() % candidates.size())];
        } else {
          arg = candidates.front();
        }
      }
      sel.pos = arg;
      break;
    }
    case PivotKind::kRandomImprovement:
      sel.pos = static_cast<std::size_t>(rng.next() % moves.size());
      break;
  }
  const Coeff& chosen_gain = moves[sel.pos].second;
  for (const auto& [i, gain] : moves) {
    if (gain == chosen_gain) ++sel.ties_at_gain;
  }
  return sel;
}

}  // namespace

Trace run_search(const QpbFunction& f, const Vertex& start,
                 const PivotRule& rule, std::uint64_t step_limit) {
  validate(rule);
  if (start.size() != f.num_vars()) {
    throw std::invalid_argument("start vertex dimension does not match");
  }
  const std::uint64_t limit =
      step_limit == 0 ? default_step_limit(f.num_vars()) : step_limit;

  Trace trace{rule, start, {}, start, Terminated::kLocalMax, {}};
  SearchState s = make_state(f, start);
  SplitMix64 rng(rule.seed);
  std::vector<std::pair<int, Coeff>> moves;
  for (;;) {
    moves.clear();
    for (int i = 1; i <= f.num_vars(); ++i) {
      Coeff gain = state_flip_gain(s, i);
      if (gain > 0) moves.emplace_back(i, std::move(gain));
    }
    if (moves.empty()) {
      trace.terminated = Terminated::kLocalMax;
      break;
    }
    if (trace.steps.size() >= limit) {
      trace.terminated = Terminated::kStepLimit;
      break;
    }
    const Selection sel = select_move(moves, rule, rng);
    const auto& [index, gain] = moves[sel.pos];
    apply_flip(s, f, index);
    trace.steps.push_back(TraceStep{index, gain, s.value});
    if (sel.ties_at_gain >= 2) {
      trace.tie_events.push_back(trace.steps.size());
    }
  }
  trace.end = s.vertex;
  return trace;
}

std::vector<StepCountRow> step_count_table(Family family,
                                           const std::vector<int>& sizes,
                                           const std::vector<PivotRule>& rules,
                                           MMode mode,
                                           std::uint64_t step_limit) {
  std::vector<StepCountRow> rows;
  rows.reserve(sizes.size() * rules.size());
  for (int n : sizes) {
    const FamilyInstance inst =
        family == Family::kF ? build_f(n, mode) : build_g(n, mode);
    for (const PivotRule& rule : rules) {
      Trace t = run_search(inst.function, Vertex::zeros(n), rule, step_limit);
      rows.push_back(
          StepCountRow{n, rule, t.steps.size(), std::move(t.end)});
    }
  }
  return rows;
}

}  // namespace qpbf
