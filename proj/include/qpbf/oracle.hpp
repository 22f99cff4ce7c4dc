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

#ifndef QPBF_ORACLE_HPP_
#define QPBF_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/function.hpp"
#include "qpbf/vertex.hpp"

namespace qpbf {

// Exhaustive ground-truth routines over the improvement graph (the digraph on
// {0,1}^n with an arc x -> y whenever y is x with one bit flipped and
// f(y) > f(x)). Everything here is brute force on purpose: these are the
// oracles the scalable code paths are checked against, so they favor being
// obviously correct over being fast.

/// Default cap on n for the exhaustive routines (2^20 vertices).
inline constexpr int kDefaultOracleThreshold = 20;

struct ImprovementGraphSummary {
  int n = 0;
  std::size_t reachable_count = 0;
  /// Local maxima reachable from the start, in ascending vertex order.
  std::vector<Vertex> reachable_sinks;
  /// BFS depth (number of improving flips) from the start to every reachable
  /// vertex; shortest_to[start] == 0.
  std::unordered_map<Vertex, int, VertexHash> shortest_to;
};

/// All local maxima of f, in ascending vertex order.
/// Throws infeasible_error if f.num_vars() > threshold.
std::vector<Vertex> enumerate_local_maxima(
    const QpbFunction& f, int threshold = kDefaultOracleThreshold);

/// BFS over improving arcs from `start`; improving neighbors are expanded in
/// ascending index order.
ImprovementGraphSummary reachable_from(
    const QpbFunction& f, const Vertex& start,
    int threshold = kDefaultOracleThreshold);

/// Length of a shortest increasing path from start to target. Throws
/// std::invalid_argument if target is not reachable.
int shortest_increasing_path_length(const QpbFunction& f, const Vertex& start,
                                    const Vertex& target,
                                    int threshold = kDefaultOracleThreshold);

/// True iff p(n+4) >= 2 p(n) for every consecutive pair of sizes and
/// p(n)^4 >= 2^n for every entry (both checked in exact integers; a map with
/// a single entry checks only the base bound). The sizes present must be
/// consecutive family sizes (n, n+4, n+8, ...); a gap throws
/// std::invalid_argument.
bool verify_doubling(const std::map<int, Coeff>& p_values);

}  // namespace qpbf

#endif  // QPBF_ORACLE_HPP_
