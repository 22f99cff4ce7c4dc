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

#include <map>
#include <stdexcept>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/errors.hpp"
#include "qpbf/families.hpp"
#include "qpbf/function.hpp"
#include "qpbf/oracle.hpp"
#include "qpbf/search.hpp"
#include "qpbf/vertex.hpp"

TEST_CASE("local maxima of the small members are unique") {
  const qpbf::QpbFunction f2 = qpbf::build_f(2, qpbf::MMode::kExact).function;
  CHECK(qpbf::enumerate_local_maxima(f2) ==
        std::vector<qpbf::Vertex>{qpbf::Vertex::ones(2)});

  const qpbf::QpbFunction f6 = qpbf::build_f(6, qpbf::MMode::kExact).function;
  CHECK(qpbf::enumerate_local_maxima(f6) ==
        std::vector<qpbf::Vertex>{qpbf::Vertex::ones(6)});

  const qpbf::QpbFunction f10 =
      qpbf::build_f(10, qpbf::MMode::kExact).function;
  CHECK(qpbf::enumerate_local_maxima(f10) ==
        std::vector<qpbf::Vertex>{qpbf::Vertex::ones(10)});

  const qpbf::QpbFunction g6 = qpbf::build_g(6, qpbf::MMode::kExact).function;
  CHECK(qpbf::enumerate_local_maxima(g6) ==
        std::vector<qpbf::Vertex>{qpbf::Vertex::from_string("111011")});
}

TEST_CASE("a function with several maxima reports all of them in order") {
  // f(x) = x1 + x2 - 3 x1 x2 has maxima at 10 and 01.
  qpbf::QpbFunction f(2);
  f.add_linear(1, 1);
  f.add_linear(2, 1);
  f.add_quadratic(1, 2, -3);
  CHECK(qpbf::enumerate_local_maxima(f) ==
        std::vector<qpbf::Vertex>{qpbf::Vertex::from_string("01"),
                                  qpbf::Vertex::from_string("10")});
}

TEST_CASE("reachability summaries from the origin") {
  struct Expected {
    qpbf::Family family;
    int n;
    std::size_t reachable;
    const char* sink;
  };
  const std::vector<Expected> table = {
      {qpbf::Family::kF, 2, 4, "11"},
      {qpbf::Family::kF, 6, 14, "111111"},
      {qpbf::Family::kF, 10, 94, "1111111111"},
      {qpbf::Family::kG, 6, 36, "111011"},
  };
  for (const Expected& e : table) {
    const qpbf::QpbFunction f =
        (e.family == qpbf::Family::kF
             ? qpbf::build_f(e.n, qpbf::MMode::kExact)
             : qpbf::build_g(e.n, qpbf::MMode::kExact))
            .function;
    const auto summary = qpbf::reachable_from(f, qpbf::Vertex::zeros(e.n));
    CHECK(summary.n == e.n);
    CHECK(summary.reachable_count == e.reachable);
    CHECK(summary.reachable_sinks ==
          std::vector<qpbf::Vertex>{qpbf::Vertex::from_string(e.sink)});
    CHECK(summary.shortest_to.size() == e.reachable);
    CHECK(summary.shortest_to.at(qpbf::Vertex::zeros(e.n)) == 0);
  }
}

TEST_CASE("breadth-first depths are consistent with single flips") {
  const qpbf::QpbFunction f = qpbf::build_f(6, qpbf::MMode::kExact).function;
  const auto summary = qpbf::reachable_from(f, qpbf::Vertex::zeros(6));
  for (const auto& [v, d] : summary.shortest_to) {
    if (d == 0) {
      CHECK(v == qpbf::Vertex::zeros(6));
      continue;
    }
    // Some improving predecessor sits exactly one level closer to the start.
    bool found = false;
    for (int i = 1; i <= 6 && !found; ++i) {
      qpbf::Vertex u = v;
      u.flip(i);
      const auto it = summary.shortest_to.find(u);
      found = it != summary.shortest_to.end() && it->second == d - 1 &&
              qpbf::flip_gain(f, u, i) > 0;
    }
    CHECK(found);
  }
}

TEST_CASE("shortest increasing paths to the maximum") {
  const std::vector<std::pair<int, int>> expected = {{2, 2}, {6, 10}, {10, 30}};
  for (const auto& [n, p] : expected) {
    const qpbf::QpbFunction f = qpbf::build_f(n, qpbf::MMode::kExact).function;
    CHECK(qpbf::shortest_increasing_path_length(
              f, qpbf::Vertex::zeros(n), qpbf::Vertex::ones(n)) == p);
    // Every single-flip run takes exactly as many steps: the shortest and the
    // longest increasing path from the origin coincide on this family.
    const qpbf::Trace t = qpbf::run_search(f, qpbf::Vertex::zeros(n),
                                           qpbf::PivotRule::worst());
    CHECK(t.steps.size() == static_cast<std::size_t>(p));
  }
}

TEST_CASE("unreachable targets are reported, not silently distanced") {
  const qpbf::QpbFunction f = qpbf::build_f(6, qpbf::MMode::kExact).function;
  CHECK_THROWS_AS((void)qpbf::shortest_increasing_path_length(
                      f, qpbf::Vertex::zeros(6),
                      qpbf::Vertex::from_string("000001")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)qpbf::shortest_increasing_path_length(
                      f, qpbf::Vertex::ones(6), qpbf::Vertex::zeros(6)),
                  std::invalid_argument);
}

TEST_CASE("exhaustive routines refuse oversized inputs") {
  const qpbf::QpbFunction big(21);
  CHECK_THROWS_AS((void)qpbf::enumerate_local_maxima(big),
                  qpbf::infeasible_error);
  CHECK_THROWS_AS((void)qpbf::reachable_from(big, qpbf::Vertex::zeros(21)),
                  qpbf::infeasible_error);
  CHECK_THROWS_AS((void)qpbf::shortest_increasing_path_length(
                      big, qpbf::Vertex::zeros(21), qpbf::Vertex::ones(21)),
                  qpbf::infeasible_error);
  CHECK_NOTHROW((void)qpbf::enumerate_local_maxima(big, 21));
}

TEST_CASE("doubling check accepts the measured step counts") {
  const std::map<int, qpbf::Coeff> measured = {
      {2, 2}, {6, 10}, {10, 30}, {14, 74}, {18, 166}, {22, 354}};
  CHECK(qpbf::verify_doubling(measured));
  CHECK(qpbf::verify_doubling({{2, 2}}));
  CHECK(qpbf::verify_doubling({{6, 10}}));
  CHECK(qpbf::verify_doubling({}));
}

TEST_CASE("doubling check rejects slow growth") {
  // Second entry falls short of twice the first.
  CHECK_FALSE(qpbf::verify_doubling({{2, 2}, {6, 3}}));
  // Fourth power below 2^n.
  CHECK_FALSE(qpbf::verify_doubling({{2, 1}}));
  CHECK_FALSE(qpbf::verify_doubling({{6, 2}}));
  // Doubling holds pairwise but one entry misses the base bound.
  CHECK_FALSE(qpbf::verify_doubling({{6, 2}, {10, 30}}));
}

TEST_CASE("doubling check demands consecutive sizes") {
  CHECK_THROWS_AS((void)qpbf::verify_doubling({{2, 2}, {10, 30}}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)qpbf::verify_doubling({{6, 10}, {18, 166}}),
                  std::invalid_argument);
}

TEST_CASE("doubling check uses exact arithmetic at large sizes") {
  // p(n) = 2^(n/4) is the exact break-even point: p^4 == 2^n passes, and the
  // next smaller integer must fail even where doubles would round it away.
  std::map<int, qpbf::Coeff> exact_break_even;
  std::map<int, qpbf::Coeff> one_short;
  const int n = 200;
  exact_break_even[n] = qpbf::Coeff(1) << (n / 4);
  one_short[n] = (qpbf::Coeff(1) << (n / 4)) - 1;
  CHECK(qpbf::verify_doubling(exact_break_even));
  CHECK_FALSE(qpbf::verify_doubling(one_short));
}
