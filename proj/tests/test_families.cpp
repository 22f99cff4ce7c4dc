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

#include <stdexcept>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/errors.hpp"
#include "qpbf/families.hpp"
#include "qpbf/function.hpp"
#include "qpbf/vertex.hpp"

namespace {

qpbf::QpbFunction scaled_copy(const qpbf::QpbFunction& f, const qpbf::Coeff& s) {
  qpbf::QpbFunction out(f.num_vars());
  for (int i = 1; i <= f.num_vars(); ++i) {
    out.add_linear(i, f.linear(i) * s);
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    out.add_quadratic(key.first, key.second, c * s);
  }
  return out;
}

}  // namespace

TEST_CASE("token parsing round-trips") {
  CHECK(qpbf::to_string(qpbf::Family::kF) == "f");
  CHECK(qpbf::to_string(qpbf::Family::kG) == "g");
  CHECK(qpbf::to_string(qpbf::MMode::kExact) == "exact");
  CHECK(qpbf::to_string(qpbf::MMode::kBound) == "bound");
  CHECK(qpbf::parse_family("f") == qpbf::Family::kF);
  CHECK(qpbf::parse_family("g") == qpbf::Family::kG);
  CHECK(qpbf::parse_m_mode("exact") == qpbf::MMode::kExact);
  CHECK(qpbf::parse_m_mode("bound") == qpbf::MMode::kBound);
  CHECK_THROWS_AS((void)qpbf::parse_family("h"), std::invalid_argument);
  CHECK_THROWS_AS((void)qpbf::parse_m_mode("tight"), std::invalid_argument);
}

TEST_CASE("size must be 2 mod 4 and positive") {
  for (int n : {-2, 0, 1, 3, 4, 5, 8, 12}) {
    CHECK_THROWS_AS((void)qpbf::build_f(n, qpbf::MMode::kBound),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)qpbf::build_g(n, qpbf::MMode::kBound),
                    std::invalid_argument);
  }
}

TEST_CASE("base cases") {
  const qpbf::FamilyInstance f2 = qpbf::build_f(2, qpbf::MMode::kExact);
  CHECK(f2.n == 2);
  CHECK(f2.m_sequence.empty());
  CHECK(f2.function.linear(1) == 1);
  CHECK(f2.function.linear(2) == 1);
  CHECK(f2.function.quadratic_terms().empty());

  const qpbf::FamilyInstance g2 = qpbf::build_g(2, qpbf::MMode::kBound);
  CHECK(g2.function.linear(1) == 2);
  CHECK(g2.function.linear(2) == 1);
  CHECK(g2.function.quadratic_terms().empty());
  CHECK(qpbf::exact_range(g2.function) ==
        std::pair<qpbf::Coeff, qpbf::Coeff>(0, 3));
}

TEST_CASE("six-variable instance, coefficient by coefficient") {
  const qpbf::FamilyInstance inst = qpbf::build_f(6, qpbf::MMode::kExact);
  REQUIRE(inst.m_sequence == std::vector<qpbf::Coeff>{3});
  const qpbf::QpbFunction& f = inst.function;

  const std::vector<qpbf::Coeff> linear = {1, 1, -12, -1, -3, -60};
  for (int i = 1; i <= 6; ++i) {
    CHECK(f.linear(i) == linear[i - 1]);
  }

  struct Entry {
    int i, j;
    int c;
  };
  const std::vector<Entry> quad = {
      {1, 3, 9},  {1, 4, -12}, {1, 5, -4}, {1, 6, 7},
      {2, 3, 9},  {2, 4, -12}, {2, 5, -4}, {2, 6, 7},
      {3, 4, 48}, {3, 5, 2},   {4, 5, 2},  {5, 6, 72},
  };
  CHECK(f.quadratic_terms().size() == quad.size());
  for (const Entry& e : quad) {
    CHECK(f.quadratic(e.i, e.j) == e.c);
  }
}

TEST_CASE("six-variable second family, coefficient by coefficient") {
  const qpbf::FamilyInstance inst = qpbf::build_g(6, qpbf::MMode::kExact);
  REQUIRE(inst.m_sequence == std::vector<qpbf::Coeff>{12});
  const qpbf::QpbFunction& g = inst.function;

  const std::vector<qpbf::Coeff> linear = {8, 4, 3, 0, 2, 0};
  for (int i = 1; i <= 6; ++i) {
    CHECK(g.linear(i) == linear[i - 1]);
  }

  struct Entry {
    int i, j;
    int c;
  };
  const std::vector<Entry> quad = {
      {1, 4, -27}, {2, 4, -28}, {3, 4, 72},
      {3, 5, 12},  {4, 6, -96}, {5, 6, 120},
  };
  CHECK(g.quadratic_terms().size() == quad.size());
  for (const Entry& e : quad) {
    CHECK(g.quadratic(e.i, e.j) == e.c);
  }

  // The base-case spread (0..3) makes both scale modes agree at this size.
  CHECK(qpbf::build_g(6, qpbf::MMode::kBound).function == g);
}

TEST_CASE("scale-constant sequences per mode") {
  CHECK(qpbf::build_f(10, qpbf::MMode::kExact).m_sequence ==
        std::vector<qpbf::Coeff>{3, 123});
  CHECK(qpbf::build_f(10, qpbf::MMode::kBound).m_sequence ==
        std::vector<qpbf::Coeff>{3, 267});
  CHECK(qpbf::build_f(14, qpbf::MMode::kExact).m_sequence ==
        std::vector<qpbf::Coeff>{3, 123, 39092});
  CHECK(qpbf::build_f(14, qpbf::MMode::kBound).m_sequence ==
        std::vector<qpbf::Coeff>{3, 267, 179747});
  CHECK(qpbf::build_g(14, qpbf::MMode::kExact).m_sequence ==
        std::vector<qpbf::Coeff>{12, 1152, 310152});
  CHECK(qpbf::build_g(18, qpbf::MMode::kExact).m_sequence ==
        std::vector<qpbf::Coeff>{12, 1152, 310152, 138045168});
}

TEST_CASE("bound-mode scale constants dominate exact ones") {
  const auto exact = qpbf::build_f(18, qpbf::MMode::kExact).m_sequence;
  const auto bound = qpbf::build_f(18, qpbf::MMode::kBound).m_sequence;
  REQUIRE(exact.size() == bound.size());
  for (std::size_t k = 0; k < exact.size(); ++k) {
    CHECK(bound[k] >= exact[k]);
  }
}

TEST_CASE("recursion locality: the prefix is the smaller member") {
  const qpbf::QpbFunction f10 =
      qpbf::build_f(10, qpbf::MMode::kExact).function;
  CHECK(qpbf::restrict_to_prefix(f10, 6) ==
        qpbf::build_f(6, qpbf::MMode::kExact).function);

  // For the second family each step multiplies the inner function by 4.
  const qpbf::QpbFunction g10 =
      qpbf::build_g(10, qpbf::MMode::kExact).function;
  CHECK(qpbf::restrict_to_prefix(g10, 6) ==
        scaled_copy(qpbf::build_g(6, qpbf::MMode::kExact).function, 4));
}

TEST_CASE("exact spread of the six-variable instance") {
  const qpbf::QpbFunction f = qpbf::build_f(6, qpbf::MMode::kExact).function;
  const auto [lo, hi] = qpbf::exact_range(f);
  CHECK(lo == -72);
  CHECK(hi == 50);
  // The next scale constant in exact mode is hi - lo + 1.
  CHECK(hi - lo + 1 == 123);
}

TEST_CASE("coefficient-sum bound") {
  const qpbf::QpbFunction f = qpbf::build_f(6, qpbf::MMode::kExact).function;
  CHECK(qpbf::coefficient_bound(f) == 266);
  CHECK(qpbf::coefficient_bound(
            qpbf::build_f(2, qpbf::MMode::kExact).function) == 2);
}

TEST_CASE("coefficient bit widths") {
  CHECK(qpbf::max_coefficient_bits(qpbf::build_f(2, qpbf::MMode::kExact)) == 1);
  CHECK(qpbf::max_coefficient_bits(qpbf::build_f(6, qpbf::MMode::kExact)) == 7);
  CHECK(qpbf::max_coefficient_bits(qpbf::build_f(10, qpbf::MMode::kExact)) ==
        15);
  CHECK(qpbf::max_coefficient_bits(qpbf::build_f(10, qpbf::MMode::kBound)) ==
        16);
  CHECK(qpbf::max_coefficient_bits(qpbf::build_f(50, qpbf::MMode::kBound)) ==
        151);
}

TEST_CASE("exact mode refuses spreads past the threshold") {
  // Building size n in exact mode enumerates the size n-4 inner function.
  CHECK_THROWS_AS((void)qpbf::build_f(30, qpbf::MMode::kExact, 22),
                  qpbf::infeasible_error);
  CHECK_THROWS_AS((void)qpbf::build_g(18, qpbf::MMode::kExact, 10),
                  qpbf::infeasible_error);
  CHECK_NOTHROW((void)qpbf::build_f(18, qpbf::MMode::kExact, 14));
  // Bound mode never enumerates, so large sizes stay cheap.
  CHECK_NOTHROW((void)qpbf::build_f(50, qpbf::MMode::kBound));

  const qpbf::QpbFunction f6 =
      qpbf::build_f(6, qpbf::MMode::kExact).function;
  CHECK_THROWS_AS((void)qpbf::exact_range(f6, 5), qpbf::infeasible_error);
  CHECK_THROWS_AS((void)qpbf::exact_range(qpbf::QpbFunction(66), 100),
                  qpbf::infeasible_error);
}

TEST_CASE("every coefficient of the large bound-mode member is reproducible") {
  // Two independent builds must agree bit for bit (determinism).
  const qpbf::FamilyInstance a = qpbf::build_f(26, qpbf::MMode::kBound);
  const qpbf::FamilyInstance b = qpbf::build_f(26, qpbf::MMode::kBound);
  CHECK(a.function == b.function);
  CHECK(a.m_sequence == b.m_sequence);
  const qpbf::FamilyInstance c = qpbf::build_g(26, qpbf::MMode::kBound);
  const qpbf::FamilyInstance d = qpbf::build_g(26, qpbf::MMode::kBound);
  CHECK(c.function == d.function);
}
