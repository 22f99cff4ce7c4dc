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

#ifndef QPBF_FUNCTION_HPP_
#define QPBF_FUNCTION_HPP_

#include <map>
#include <utility>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/vertex.hpp"

namespace qpbf {

/// A quadratic pseudo-boolean function
///
///   f(x) = sum_i c_i x_i + sum_{i<j} c_ij x_i x_j,   x in {0,1}^n,
///
/// stored sparsely with exact integer coefficients. Quadratic terms are kept
/// under the canonical key (i, j) with i < j; reads are symmetric. Alongside
/// the term map the class maintains per-variable adjacency rows so that a
/// discrete derivative costs O(deg(i)) instead of O(#terms).
class QpbFunction {
 public:
  explicit QpbFunction(int n);

  int num_vars() const { return n_; }

  /// Adds c to the linear coefficient of x_i. Indices are 1-based.
  void add_linear(int i, Coeff c);
  /// Adds c to the coefficient of x_i x_j (i != j, order irrelevant).
  /// A coefficient that becomes zero is dropped from the term map.
  void add_quadratic(int i, int j, Coeff c);

  const Coeff& linear(int i) const;
  /// Coefficient of x_i x_j; zero when the term is absent.
  Coeff quadratic(int i, int j) const;
  /// All nonzero quadratic terms keyed by (i, j) with i < j.
  const std::map<std::pair<int, int>, Coeff>& quadratic_terms() const {
    return quad_;
  }
  /// Nonzero quadratic partners of x_i as (j, c_ij), ascending in j.
  const std::vector<std::pair<int, Coeff>>& neighbor_terms(int i) const;

  friend bool operator==(const QpbFunction& a, const QpbFunction& b) {
    return a.n_ == b.n_ && a.linear_ == b.linear_ && a.quad_ == b.quad_;
  }

 private:
  void check_var(int i) const;
  void bump_adjacency(int i, int j, const Coeff& c);

  int n_;
  std::vector<Coeff> linear_;
  std::map<std::pair<int, int>, Coeff> quad_;
  std::vector<std::vector<std::pair<int, Coeff>>> adj_;
};

/// f(x). Throws std::invalid_argument if x.size() != f.num_vars().
Coeff eval(const QpbFunction& f, const Vertex& x);

/// Discrete derivative of f at x in direction i:
///   d_i f(x) = f(x with x_i = 1) - f(x with x_i = 0)
///            = c_i + sum_j c_ij x_j over the neighbors j of i.
/// Independent of the current value of x_i.
Coeff discrete_derivative(const QpbFunction& f, const Vertex& x, int i);

/// Value change caused by flipping x_i: d_i f(x) if x_i == 0, else -d_i f(x).
Coeff flip_gain(const QpbFunction& f, const Vertex& x, int i);

/// All strictly improving single flips at x as (index, gain), gain > 0,
/// in ascending index order.
std::vector<std::pair<int, Coeff>> improving_moves(const QpbFunction& f,
                                                   const Vertex& x);

/// True iff no single flip strictly increases f.
bool is_local_max(const QpbFunction& f, const Vertex& x);

/// The function on x_1..x_m obtained by keeping exactly the terms of f that
/// involve only the first m variables. Requires 1 <= m <= f.num_vars().
QpbFunction restrict_to_prefix(const QpbFunction& f, int m);

}  // namespace qpbf

#endif  // QPBF_FUNCTION_HPP_
