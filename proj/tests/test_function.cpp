// Copyright 2026 The qpbf Authors
//
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/families.hpp"
#include "qpbf/function.hpp"
#include "qpbf/state.hpp"
#include "qpbf/vertex.hpp"

namespace {

qpbf::QpbFunction f6() {
  return qpbf::build_f(6, qpbf::MMode::kExact).function;
}

}  // namespace

TEST_CASE("vertex basics") {
  qpbf::Vertex v = qpbf::Vertex::zeros(4);
  CHECK(v.size() == 4);
  CHECK(v.popcount() == 0);
  v.set_bit(2, 1);
  v.flip(4);
  CHECK(v.to_string() == "0101");
  CHECK(v.bit(2) == 1);
  CHECK(v.bit(1) == 0);
  CHECK(v.popcount() == 2);
  CHECK(qpbf::Vertex::from_string("0101") == v);
  CHECK(qpbf::Vertex::ones(3).to_string() == "111");
  CHECK_THROWS_AS((void)v.bit(0), std::out_of_range);
  CHECK_THROWS_AS((void)v.bit(5), std::out_of_range);
  CHECK_THROWS_AS((void)qpbf::Vertex::from_string("01x"),
                  std::invalid_argument);
}

TEST_CASE("vertex ordering is lexicographic") {
  CHECK(qpbf::Vertex::from_string("0011") < qpbf::Vertex::from_string("0100"));
  CHECK(qpbf::Vertex::from_string("10") > qpbf::Vertex::from_string("01"));
}

TEST_CASE("term accumulation and canonical storage") {
  qpbf::QpbFunction f(3);
  f.add_linear(1, 5);
  f.add_linear(1, -5);
  CHECK(f.linear(1) == 0);
  f.add_quadratic(2, 1, 7);  // stored as (1, 2)
  CHECK(f.quadratic(1, 2) == 7);
  CHECK(f.quadratic(2, 1) == 7);
  f.add_quadratic(1, 2, -7);
  CHECK(f.quadratic(1, 2) == 0);
  CHECK(f.quadratic_terms().empty());
  CHECK_THROWS_AS(f.add_quadratic(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(f.add_linear(4, 1), std::out_of_range);
  CHECK_THROWS_AS((void)f.quadratic(0, 2), std::out_of_range);
  CHECK_THROWS_AS(qpbf::QpbFunction(0), std::invalid_argument);
}

TEST_CASE("neighbor terms stay sorted and drop zeroed entries") {
  qpbf::QpbFunction f(4);
  f.add_quadratic(2, 4, 3);
  f.add_quadratic(1, 2, 1);
  f.add_quadratic(2, 3, 2);
  const auto& row = f.neighbor_terms(2);
  REQUIRE(row.size() == 3);
  CHECK(row[0].first == 1);
  CHECK(row[1].first == 3);
  CHECK(row[2].first == 4);
  f.add_quadratic(2, 3, -2);
  CHECK(f.neighbor_terms(2).size() == 2);
  CHECK(f.neighbor_terms(3).empty());
}

TEST_CASE("evaluation on fixed points") {
  const qpbf::QpbFunction f = f6();
  CHECK(qpbf::eval(f, qpbf::Vertex::zeros(6)) == 0);
  CHECK(qpbf::eval(f, qpbf::Vertex::from_string("111000")) == 8);
  CHECK(qpbf::eval(f, qpbf::Vertex::ones(6)) == 50);
  CHECK_THROWS_AS((void)qpbf::eval(f, qpbf::Vertex::zeros(5)),
                  std::invalid_argument);
}

TEST_CASE("discrete derivatives at fixed points") {
  const qpbf::QpbFunction f = f6();
  const std::vector<qpbf::Coeff> at_origin = {1, 1, -12, -1, -3, -60};
  const std::vector<qpbf::Coeff> at_ones = {1, 1, 56, 25, 65, 26};
  const qpbf::Vertex zeros = qpbf::Vertex::zeros(6);
  const qpbf::Vertex ones = qpbf::Vertex::ones(6);
  for (int i = 1; i <= 6; ++i) {
    CHECK(qpbf::discrete_derivative(f, zeros, i) == at_origin[i - 1]);
    CHECK(qpbf::discrete_derivative(f, ones, i) == at_ones[i - 1]);
  }
  CHECK(qpbf::discrete_derivative(f, qpbf::Vertex::from_string("110000"), 3) ==
        6);
}

TEST_CASE("flip gain sign tracks the current bit") {
  const qpbf::QpbFunction f = f6();
  const qpbf::Vertex v = qpbf::Vertex::from_string("111100");
  // Bit 1 is set, so the gain of flipping it is minus the derivative.
  CHECK(qpbf::flip_gain(f, v, 1) == 2);
  qpbf::Vertex w = v;
  w.flip(1);
  CHECK(qpbf::eval(f, w) - qpbf::eval(f, v) == 2);
  CHECK(qpbf::flip_gain(f, w, 1) == -2);
}

TEST_CASE("improving moves are ascending and strictly positive") {
  const qpbf::QpbFunction f = f6();
  const auto moves = qpbf::improving_moves(f, qpbf::Vertex::from_string("110000"));
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].first == 3);
  CHECK(moves[0].second == 6);
  CHECK_FALSE(qpbf::is_local_max(f, qpbf::Vertex::from_string("110000")));
  CHECK(qpbf::is_local_max(f, qpbf::Vertex::ones(6)));
  const auto at_origin = qpbf::improving_moves(f, qpbf::Vertex::zeros(6));
  REQUIRE(at_origin.size() == 2);
  CHECK(at_origin[0] == std::pair<int, qpbf::Coeff>(1, 1));
  CHECK(at_origin[1] == std::pair<int, qpbf::Coeff>(2, 1));
}

TEST_CASE("prefix restriction keeps exactly the inner terms") {
  const qpbf::QpbFunction f = f6();
  const qpbf::QpbFunction inner = qpbf::restrict_to_prefix(f, 2);
  CHECK(inner.num_vars() == 2);
  CHECK(inner.linear(1) == 1);
  CHECK(inner.linear(2) == 1);
  CHECK(inner.quadratic_terms().empty());
  CHECK(inner == qpbf::build_f(2, qpbf::MMode::kExact).function);
  CHECK_THROWS_AS((void)qpbf::restrict_to_prefix(f, 7), std::invalid_argument);
  CHECK_THROWS_AS((void)qpbf::restrict_to_prefix(f, 0), std::invalid_argument);
}

TEST_CASE("function equality compares terms, not adjacency internals") {
  qpbf::QpbFunction a(3);
  a.add_linear(2, 4);
  a.add_quadratic(1, 3, -2);
  qpbf::QpbFunction b(3);
  b.add_quadratic(3, 1, -2);
  b.add_linear(2, 4);
  CHECK(a == b);
  b.add_linear(1, 1);
  CHECK_FALSE(a == b);
}

TEST_CASE("incremental state agrees with scratch evaluation") {
  const qpbf::QpbFunction f = f6();
  qpbf::SearchState state = qpbf::make_state(f, qpbf::Vertex::zeros(6));
  // Walk the full 6-cube in Gray-code order, checking after every flip.
  for (unsigned k = 1; k < (1u << 6); ++k) {
    const int flip_index = std::countr_zero(k) + 1;
    qpbf::apply_flip(state, f, flip_index);
    CHECK(state.value == qpbf::eval(f, state.vertex));
    for (int i = 1; i <= 6; ++i) {
      CHECK(state.derivatives[i - 1] ==
            qpbf::discrete_derivative(f, state.vertex, i));
      CHECK(qpbf::state_flip_gain(state, i) ==
            qpbf::flip_gain(f, state.vertex, i));
    }
  }
}

TEST_CASE("coefficient bit length") {
  CHECK(qpbf::bit_length(qpbf::Coeff(0)) == 0);
  CHECK(qpbf::bit_length(qpbf::Coeff(1)) == 1);
  CHECK(qpbf::bit_length(qpbf::Coeff(-1)) == 1);
  CHECK(qpbf::bit_length(qpbf::Coeff(7)) == 3);
  CHECK(qpbf::bit_length(qpbf::Coeff(-8)) == 4);
  CHECK(qpbf::bit_length(qpbf::Coeff(72)) == 7);
}
