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

#ifndef QPBF_FAMILIES_HPP_
#define QPBF_FAMILIES_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/function.hpp"

namespace qpbf {

/// The two recursively defined instance families. Both are defined for
/// n = 2, 6, 10, ... (n ≡ 2 mod 4); each recursion step appends four
/// variables to the instance four sizes smaller.
enum class Family { kF, kG };

/// How the scale constant M for a recursion step is obtained.
///
/// kExact uses the true spread max f - min f of the inner function (plus the
/// additive constant the step calls for), found by exhaustive enumeration;
/// it is the tightest choice but limited to small inner sizes.
///
/// kBound replaces the spread with the always-sufficient upper bound
/// sum of |coefficients|, so instances of any size can be built. Every
/// structural property checked in this library holds under either mode,
/// because each M only needs to dominate the inner function's spread.
enum class MMode { kExact, kBound };

/// Largest inner size whose exact spread we agree to brute-force by default:
/// building size n in kExact mode enumerates 2^(n-4) vertices per step, so the
/// threshold applies to n - 4 of the outermost step.
inline constexpr int kDefaultExactThreshold = 22;

std::string to_string(Family family);
std::string to_string(MMode mode);
Family parse_family(std::string_view token);   // "f" | "g"
MMode parse_m_mode(std::string_view token);    // "exact" | "bound"

/// A built family member together with its provenance: which family, which
/// size, how the scale constants were chosen, and the scale constant used at
/// each recursion step (innermost first; empty for the base case n = 2).
struct FamilyInstance {
  QpbFunction function;
  Family family = Family::kF;
  int n = 0;
  MMode m_mode = MMode::kExact;
  std::vector<Coeff> m_sequence;
};

/// Builds the f-family member of size n (n ≡ 2 mod 4, n >= 2).
/// In kExact mode, throws infeasible_error when a recursion step would need
/// the spread of an inner function larger than exact_threshold variables.
FamilyInstance build_f(int n, MMode mode,
                       int exact_threshold = kDefaultExactThreshold);

/// Builds the g-family member of size n; same contract as build_f.
FamilyInstance build_g(int n, MMode mode,
                       int exact_threshold = kDefaultExactThreshold);

/// Exact (min f, max f) over all 2^n vertices, computed by a Gray-code walk
/// in O(2^n) flip updates. Throws infeasible_error if f.num_vars() exceeds
/// the threshold.
std::pair<Coeff, Coeff> exact_range(const QpbFunction& f,
                                    int threshold = kDefaultExactThreshold);

/// Sum of |c| over all coefficients of f; dominates max f - min f.
Coeff coefficient_bound(const QpbFunction& f);

int max_coefficient_bits(const QpbFunction& f);
int max_coefficient_bits(const FamilyInstance& inst);

}  // namespace qpbf

#endif  // QPBF_FAMILIES_HPP_
