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

#ifndef QPBF_VERIFY_HPP_
#define QPBF_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/families.hpp"
#include "qpbf/vertex.hpp"

namespace qpbf {

// Mechanized checks of the structural properties the instance families are
// built to have. Where the f-family member of size n is written as an inner
// member of size m = n - 4 plus four tail variables x_{m+1}..x_{m+4}, the
// checks quantify exhaustively over every vertex of each property's guard
// region, so a pass is a proof at that size, not a sample.

enum class ClaimId {
  // Flip-gain properties of the f-family tail variables. kC1..kC4 pin down
  // exactly when each tail variable can rise; kC5/kC6 show two subcubes that
  // no increasing path leaves; kC7 blocks prefix flips while x_{m+4} = 0;
  // kC8 states f(x,1,1,1,1) - f_inner(x) is independent of x.
  kC1,
  kC2,
  kC3,
  kC4,
  kC5,
  kC6,
  kC7,
  kC8,
  // Sign table of all discrete derivatives at the six point classes an
  // increasing path from the origin traverses.
  kTableColumn1,
  kTableColumn2,
  kTableColumn3,
  kTableColumn4,
  kTableColumn5,
  kTableColumn6,
  // Coefficient bit growth stays near c * n * log2(n).
  kBitGrowth,
  // Greedy (best-improvement) on the g-family: tie-free run, predicted
  // endpoint, step count above 2^(n/4).
  kGreedyNoTies,
  kGreedyEndpoint,
};

std::string_view claim_name(ClaimId id);

struct ClaimReport {
  ClaimId claim_id = ClaimId::kC1;
  int n = 0;
  std::uint64_t checked_points = 0;
  /// On failure, a vertex that refutes the property (the offending guard
  /// point, the pre-tie position, or the actual endpoint). kBitGrowth has no
  /// single offending vertex; its failures are described in `note` alone.
  std::optional<Vertex> counterexample;
  bool passed = false;
  std::string note;
};

/// Checks one of kC1..kC8 on an f-family instance with n >= 6 and inner size
/// n - 4 <= 14. Throws std::invalid_argument for other ids or families,
/// infeasible_error past the size limit.
ClaimReport check_claim(const FamilyInstance& inst, ClaimId id);

/// All of kC1..kC8 in order.
std::vector<ClaimReport> check_all_claims(const FamilyInstance& inst);

/// One report per point-class column (kTableColumn1..kTableColumn6). Every
/// sign (or sign-iff-condition) is checked for all five variable groups over
/// all admissible prefixes; where the traditional closed form of a cell
/// disagrees with the expression derived from the generated coefficients,
/// the sign stays authoritative and the note records the comparison.
std::vector<ClaimReport> check_table_signs(const FamilyInstance& inst);

/// Builds f-family members for n = 6, 10, ..., n_max in the given mode and
/// fits max_coefficient_bits against c * n * log2(n). Passes iff the ratio
/// bits / (n log2 n) stays within 1.5x of the fitted constant and never grows
/// by more than 1.5x between consecutive sizes.
ClaimReport check_bit_growth(int n_max, MMode mode);

/// Runs best-improvement from the origin on a g-family instance. The first
/// report (kGreedyNoTies) passes iff no step had a gain tie; the second
/// (kGreedyEndpoint) passes iff the run ended, within the step limit, at the
/// vertex whose zeros are exactly positions {4, 8, ..., n-2}, with
/// steps^4 > 2^n.
std::pair<ClaimReport, ClaimReport> check_greedy(const FamilyInstance& inst,
                                                 std::uint64_t step_limit = 0);

/// The g-family's unique local maximum: ones everywhere except positions
/// {4, 8, ..., n-2}.
Vertex greedy_endpoint(int n);

}  // namespace qpbf

#endif  // QPBF_VERIFY_HPP_
