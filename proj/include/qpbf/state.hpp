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

#ifndef QPBF_STATE_HPP_
#define QPBF_STATE_HPP_

#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/function.hpp"
#include "qpbf/vertex.hpp"

namespace qpbf {

/// Incrementally maintained search position: the current vertex, the current
/// function value, and all n discrete derivatives. apply_flip() updates the
/// whole struct in O(deg(i)) arithmetic operations, which is what makes long
/// local-search runs affordable; make_state() recomputes from scratch and is
/// the correctness reference the incremental path is tested against.
struct SearchState {
  Vertex vertex;
  Coeff value;
  /// derivatives[i - 1] == discrete_derivative(f, vertex, i).
  std::vector<Coeff> derivatives;
};

SearchState make_state(const QpbFunction& f, const Vertex& x);

/// Gain of flipping x_i, read off the cached derivative in O(1).
Coeff state_flip_gain(const SearchState& s, int i);

/// Flips x_i in place: adjusts value by the flip gain and patches the
/// derivative of every quadratic neighbor of i.
void apply_flip(SearchState& s, const QpbFunction& f, int i);

}  // namespace qpbf

#endif  // QPBF_STATE_HPP_
