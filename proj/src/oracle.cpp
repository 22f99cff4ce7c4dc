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

#include "qpbf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

#include "qpbf/errors.hpp"
#include "qpbf/state.hpp"

namespace qpbf {

namespace {

void check_threshold(const QpbFunction& f, int threshold) {
  if (f.num_vars() > threshold) {
    throw infeasible_error("exhaustive oracle over " +
                           std::to_string(f.num_vars()) +
                           " variables exceeds the threshold of " +
                           std::to_string(threshold));
  }
  if (f.num_vars() > 30) {
    throw infeasible_error("exhaustive oracle limited to 30 variables");
  }
}

std::uint32_t to_mask(const Vertex& v) {
  std::uint32_t mask = 0;
  for (int i = 1; i <= v.size(); ++i) {
    if (v.bit(i)) mask |= std::uint32_t{1} << (i - 1);
  }
  return mask;
}

Vertex to_vertex(std::uint32_t mask, int n) {
  Vertex v = Vertex::zeros(n);
  for (int i = 1; i <= n; ++i) {
    if (mask & (std::uint32_t{1} << (i - 1))) v.set_bit(i, true);
  }
  return v;
}

bool state_is_local_max(const SearchState& s) {
  for (int i = 1; i <= s.vertex.size(); ++i) {
    const Coeff& d = s.derivatives[static_cast<std::size_t>(i - 1)];
    if (s.vertex.bit(i) ? d < 0 : d > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Vertex> enumerate_local_maxima(const QpbFunction& f,
                                           int threshold) {
  check_threshold(f, threshold);
  const int n = f.num_vars();
  std::vector<Vertex> maxima;
  // Same Gray-code walk as the exact range: every vertex visited once, one
  // incremental flip apart.
  SearchState s = make_state(f, Vertex::zeros(n));
  if (state_is_local_max(s)) maxima.push_back(s.vertex);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    apply_flip(s, f, std::countr_zero(k) + 1);
    if (state_is_local_max(s)) maxima.push_back(s.vertex);
  }
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

ImprovementGraphSummary reachable_from(const QpbFunction& f,
                                       const Vertex& start, int threshold) {
  check_threshold(f, threshold);
  if (start.size() != f.num_vars()) {
    throw std::invalid_argument("start vertex dimension does not match");
  }
  const int n = f.num_vars();

  ImprovementGraphSummary summary;
  summary.n = n;

  std::unordered_map<std::uint32_t, int> depth;
  std::deque<std::uint32_t> frontier;
  const std::uint32_t start_mask = to_mask(start);
  depth.emplace(start_mask, 0);
  frontier.push_back(start_mask);

  std::vector<std::uint32_t> sink_masks;
  while (!frontier.empty()) {
    const std::uint32_t mask = frontier.front();
    frontier.pop_front();
    const int d = depth.at(mask);
    const Vertex v = to_vertex(mask, n);
    bool any_improving = false;
    for (int i = 1; i <= n; ++i) {
      if (flip_gain(f, v, i) > 0) {
        any_improving = true;
        const std::uint32_t next = mask ^ (std::uint32_t{1} << (i - 1));
        if (depth.emplace(next, d + 1).second) frontier.push_back(next);
      }
    }
    if (!any_improving) sink_masks.push_back(mask);
  }

  summary.reachable_count = depth.size();
  summary.shortest_to.reserve(depth.size());
  for (const auto& [mask, d] : depth) {
    summary.shortest_to.emplace(to_vertex(mask, n), d);
  }
  summary.reachable_sinks.reserve(sink_masks.size());
  for (std::uint32_t mask : sink_masks) {
    summary.reachable_sinks.push_back(to_vertex(mask, n));
  }
  std::sort(summary.reachable_sinks.begin(), summary.reachable_sinks.end());
  return summary;
}

int shortest_increasing_path_length(const QpbFunction& f, const Vertex& start,
                                    const Vertex& target, int threshold) {
  const ImprovementGraphSummary summary = reachable_from(f, start, threshold);
  const auto it = summary.shortest_to.find(target);
  if (it == summary.shortest_to.end()) {
    throw std::invalid_argument(
        "target is not reachable by increasing flips from the start");
  }
  return it->second;
}

bool verify_doubling(const std::map<int, Coeff>& p_values) {
  int previous_n = 0;
  const Coeff* previous_p = nullptr;
  for (const auto& [n, p] : p_values) {
    if (previous_p != nullptr && n != previous_n + 4) {
      throw std::invalid_argument(
          "sizes must be consecutive (n, n+4, ...); missing " +
          std::to_string(previous_n + 4));
    }
    // p^4 >= 2^n is the integer form of p >= 2^(n/4).
    const Coeff fourth = p * p * p * p;
    if (fourth < (Coeff(1) << n)) return false;
    if (previous_p != nullptr && p < 2 * (*previous_p)) return false;
    previous_n = n;
    previous_p = &p;
  }
  return true;
}

}  // namespace qpbf
