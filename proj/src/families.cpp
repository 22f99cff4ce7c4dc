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

#include "qpbf/families.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "qpbf/errors.hpp"
#include "qpbf/state.hpp"

namespace qpbf {

std::string to_string(Family family) {
  return family == Family::kF ? "f" : "g";
}

std::string to_string(MMode mode) {
  return mode == MMode::kExact ? "exact" : "bound";
}

Family parse_family(std::string_view token) {
  if (token == "f" || token == "F") return Family::kF;
  if (token == "g" || token == "G") return Family::kG;
  throw std::invalid_argument("unknown family: " + std::string(token));
}

MMode parse_m_mode(std::string_view token) {
  if (token == "exact" || token == "Exact") return MMode::kExact;
  if (token == "bound" || token == "Bound") return MMode::kBound;
  throw std::invalid_argument("unknown m_mode: " + std::string(token));
}

std::pair<Coeff, Coeff> exact_range(const QpbFunction& f, int threshold) {
  const int n = f.num_vars();
  if (n > threshold) {
    throw infeasible_error("exact range over " + std::to_string(n) +
                           " variables exceeds the threshold of " +
                           std::to_string(threshold));
  }
  if (n > 62) {
    throw infeasible_error("exact range limited to 62 variables");
  }
  // Gray-code walk: vertex number k has coordinates k ^ (k >> 1), and
  // consecutive vertices differ exactly in bit countr_zero(k), so the whole
  // cube is covered by 2^n - 1 incremental flips.
  SearchState s = make_state(f, Vertex::zeros(n));
  Coeff lo = s.value;
  Coeff hi = s.value;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    const int i = std::countr_zero(k) + 1;
    apply_flip(s, f, i);
    if (s.value < lo) lo = s.value;
    if (s.value > hi) hi = s.value;
  }
  return {std::move(lo), std::move(hi)};
}

Coeff coefficient_bound(const QpbFunction& f) {
  Coeff sum = 0;
  for (int i = 1; i <= f.num_vars(); ++i) {
    sum += boost::multiprecision::abs(f.linear(i));
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    sum += boost::multiprecision::abs(c);
  }
  return sum;
}

int max_coefficient_bits(const QpbFunction& f) {
  int bits = 0;
  for (int i = 1; i <= f.num_vars(); ++i) {
    bits = std::max(bits, bit_length(f.linear(i)));
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    bits = std::max(bits, bit_length(c));
  }
  return bits;
}

int max_coefficient_bits(const FamilyInstance& inst) {
  return max_coefficient_bits(inst.function);
}

namespace {

void check_size(int n) {
  if (n < 2 || n % 4 != 2) {
    throw std::invalid_argument(
        "family size must be 2, 6, 10, ... (n = " + std::to_string(n) + ")");
  }
}

// The scale constant for the step that wraps `inner`. It only has to
// dominate the spread of `inner`, so the cheap coefficient-sum bound is as
// valid as the exhaustive spread, just larger.
Coeff scale_constant(const QpbFunction& inner, Family family, MMode mode,
                     int exact_threshold) {
  if (mode == MMode::kExact) {
    auto [lo, hi] = exact_range(inner, exact_threshold);
    Coeff spread = hi - lo;
    return family == Family::kF ? Coeff(spread + 1) : Coeff(4 * spread);
  }
  Coeff sum = coefficient_bound(inner);
  return family == Family::kF ? Coeff(sum + 1) : Coeff(4 * sum);
}

// Wraps f_m into f_{m+4}: the inner terms are kept as-is and the four tail
// variables are wired so that (per the sign analysis the families are built
// around) every increasing path from the origin must climb the inner cube,
// raise x_{m+1} and x_{m+2}, descend the inner cube, raise x_{m+3} and
// x_{m+4}, and climb the inner cube again.
QpbFunction extend_f(const QpbFunction& inner, const Coeff& m_const) {
  const int m = inner.num_vars();
  QpbFunction f(m + 4);
  for (int i = 1; i <= m; ++i) {
    if (!inner.linear(i).is_zero()) f.add_linear(i, inner.linear(i));
  }
  for (const auto& [key, c] : inner.quadratic_terms()) {
    f.add_quadratic(key.first, key.second, c);
  }
  const Coeff& M = m_const;
  f.add_linear(m + 1, -M * m * m);
  f.add_linear(m + 2, -1);
  f.add_linear(m + 3, -3);
  f.add_linear(m + 4, -5 * M * m * m);
  for (int i = 1; i <= m; ++i) {
    f.add_quadratic(i, m + 1, M * (m + 1));
    f.add_quadratic(i, m + 2, -2 * M * m);
    f.add_quadratic(i, m + 3, Coeff(-4));
    f.add_quadratic(i, m + 4, M * (m - 1) + 4);
  }
  f.add_quadratic(m + 1, m + 2, 2 * M * m * (m + 2));
  f.add_quadratic(m + 1, m + 3, Coeff(2));
  f.add_quadratic(m + 2, m + 3, Coeff(2));
  f.add_quadratic(m + 3, m + 4, 6 * M * m * m);
  return f;
}

// Wraps g_m into g_{m+4}. Unlike the f-family, the inner polynomial is
// scaled by 4 and the tail is wired so that best-improvement from the origin
// never sees a gain tie.
QpbFunction extend_g(const QpbFunction& inner, const Coeff& m_const) {
  const int m = inner.num_vars();
  QpbFunction g(m + 4);
  for (int i = 1; i <= m; ++i) {
    if (!inner.linear(i).is_zero()) g.add_linear(i, 4 * inner.linear(i));
  }
  for (const auto& [key, c] : inner.quadratic_terms()) {
    g.add_quadratic(key.first, key.second, 4 * c);
  }
  const Coeff& M = m_const;
  g.add_linear(m + 1, Coeff(3));
  g.add_linear(m + 3, Coeff(2));
  for (int i = 1; i <= m; ++i) {
    g.add_quadratic(i, m + 2, -(2 * M + i + 2));
  }
  g.add_quadratic(m + 1, m + 2, 3 * M * m);
  g.add_quadratic(m + 1, m + 3, M);
  g.add_quadratic(m + 2, m + 4, -4 * M * m);
  g.add_quadratic(m + 3, m + 4, 5 * M * m);
  return g;
}

FamilyInstance build_family(Family family, int n, MMode mode,
                            int exact_threshold) {
  check_size(n);
  QpbFunction cur(2);
  if (family == Family::kF) {
    cur.add_linear(1, Coeff(1));
    cur.add_linear(2, Coeff(1));
  } else {
    cur.add_linear(1, Coeff(2));
    cur.add_linear(2, Coeff(1));
  }
  std::vector<Coeff> m_sequence;
  for (int m = 2; m < n; m += 4) {
    Coeff m_const = scale_constant(cur, family, mode, exact_threshold);
    cur = family == Family::kF ? extend_f(cur, m_const)
                               : extend_g(cur, m_const);
    m_sequence.push_back(std::move(m_const));
  }
  return FamilyInstance{std::move(cur), family, n, mode,
                        std::move(m_sequence)};
}

}  // namespace

FamilyInstance build_f(int n, MMode mode, int exact_threshold) {
  return build_family(Family::kF, n, mode, exact_threshold);
}

FamilyInstance build_g(int n, MMode mode, int exact_threshold) {
  return build_family(Family::kG, n, mode, exact_threshold);
}

}  // namespace qpbf
