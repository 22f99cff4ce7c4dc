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

#include "qpbf/state.hpp"

#include <stdexcept>
#include <utility>

namespace qpbf {

SearchState make_state(const QpbFunction& f, const Vertex& x) {
  SearchState s;
  s.vertex = x;
  s.value = eval(f, x);
  s.derivatives.reserve(static_cast<std::size_t>(f.num_vars()));
  for (int i = 1; i <= f.num_vars(); ++i) {
    s.derivatives.push_back(discrete_derivative(f, x, i));
  }
  return s;
}

Coeff state_flip_gain(const SearchState& s, int i) {
  if (i < 1 || i > s.vertex.size()) {
    throw std::out_of_range("variable index out of range");
  }
  const Coeff& d = s.derivatives[static_cast<std::size_t>(i - 1)];
  return s.vertex.bit(i) ? Coeff(-d) : d;
}

void apply_flip(SearchState& s, const QpbFunction& f, int i) {
  if (s.vertex.size() != f.num_vars()) {
    throw std::invalid_argument("state dimension does not match function");
  }
  if (i < 1 || i > f.num_vars()) {
    throw std::out_of_range("variable index out of range");
  }
  const bool was_set = s.vertex.bit(i);
  const Coeff& d_i = s.derivatives[static_cast<std::size_t>(i - 1)];
  if (was_set) {
    s.value -= d_i;
  } else {
    s.value += d_i;
  }
  s.vertex.flip(i);
  // x_i changed, so every neighbor's derivative picks up (or drops) c_ij.
  for (const auto& [j, c] : f.neighbor_terms(i)) {
    Coeff& d_j = s.derivatives[static_cast<std::size_t>(j - 1)];
    if (was_set) {
      d_j -= c;
    } else {
      d_j += c;
    }
  }
}

}  // namespace qpbf
