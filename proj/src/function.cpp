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

#include "qpbf/function.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qpbf {

QpbFunction::QpbFunction(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("function needs at least 1 variable");
  linear_.assign(static_cast<std::size_t>(n), Coeff(0));
  adj_.assign(static_cast<std::size_t>(n), {});
}

void QpbFunction::check_var(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("variable index out of range");
}

void QpbFunction::add_linear(int i, Coeff c) {
  check_var(i);
  linear_[static_cast<std::size_t>(i - 1)] += c;
}

void QpbFunction::bump_adjacency(int i, int j, const Coeff& c) {
  auto& row = adj_[static_cast<std::size_t>(i - 1)];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, Coeff>& entry, int key) {
        return entry.first < key;
      });
  if (it != row.end() && it->first == j) {
    it->second += c;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.insert(it, {j, c});
  }
}

void QpbFunction::add_quadratic(int i, int j, Coeff c) {
  check_var(i);
  check_var(j);
  if (i == j) throw std::invalid_argument("quadratic term needs i != j");
  if (i > j) std::swap(i, j);
  if (c.is_zero()) return;
  bump_adjacency(i, j, c);
  bump_adjacency(j, i, c);
  auto [it, inserted] = quad_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) quad_.erase(it);
  }
}

const Coeff& QpbFunction::linear(int i) const {
  check_var(i);
  return linear_[static_cast<std::size_t>(i - 1)];
}

Coeff QpbFunction::quadratic(int i, int j) const {
  check_var(i);
  check_var(j);
  if (i == j) throw std::invalid_argument("quadratic term needs i != j");
  if (i > j) std::swap(i, j);
  auto it = quad_.find({i, j});
  return it == quad_.end() ? Coeff(0) : it->second;
}

const std::vector<std::pair<int, Coeff>>& QpbFunction::neighbor_terms(
    int i) const {
  check_var(i);
  return adj_[static_cast<std::size_t>(i - 1)];
}

namespace {

void check_dimension(const QpbFunction& f, const Vertex& x) {
  if (x.size() != f.num_vars()) {
    throw std::invalid_argument("vertex dimension does not match function");
  }
}

}  // namespace

Coeff eval(const QpbFunction& f, const Vertex& x) {
  check_dimension(f, x);
  Coeff value = 0;
  for (int i = 1; i <= f.num_vars(); ++i) {
    if (x.bit(i)) value += f.linear(i);
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    if (x.bit(key.first) && x.bit(key.second)) value += c;
  }
  return value;
}

Coeff discrete_derivative(const QpbFunction& f, const Vertex& x, int i) {
  check_dimension(f, x);
  Coeff d = f.linear(i);
  for (const auto& [j, c] : f.neighbor_terms(i)) {
    if (x.bit(j)) d += c;
  }
  return d;
}

Coeff flip_gain(const QpbFunction& f, const Vertex& x, int i) {
  Coeff d = discrete_derivative(f, x, i);
  return x.bit(i) ? Coeff(-d) : d;
}

std::vector<std::pair<int, Coeff>> improving_moves(const QpbFunction& f,
                                                   const Vertex& x) {
  check_dimension(f, x);
  std::vector<std::pair<int, Coeff>> moves;
  for (int i = 1; i <= f.num_vars(); ++i) {
    Coeff g = flip_gain(f, x, i);
    if (g > 0) moves.emplace_back(i, std::move(g));
  }
  return moves;
}

bool is_local_max(const QpbFunction& f, const Vertex& x) {
  check_dimension(f, x);
  for (int i = 1; i <= f.num_vars(); ++i) {
    if (flip_gain(f, x, i) > 0) return false;
  }
  return true;
}

QpbFunction restrict_to_prefix(const QpbFunction& f, int m) {
  if (m < 1 || m > f.num_vars()) {
    throw std::invalid_argument("prefix length out of range");
  }
  QpbFunction g(m);
  for (int i = 1; i <= m; ++i) {
    if (!f.linear(i).is_zero()) g.add_linear(i, f.linear(i));
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    if (key.second <= m) g.add_quadratic(key.first, key.second, c);
  }
  return g;
}

}  // namespace qpbf
