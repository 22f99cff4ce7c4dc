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

#ifndef QPBF_COEFF_HPP_
#define QPBF_COEFF_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace qpbf {

/// Exact signed integer coefficient. The recursively built instances grow
/// coefficients at roughly c * n * log2(n) bits, far past any fixed-width
/// type, so all arithmetic in this library is arbitrary precision.
using Coeff = boost::multiprecision::cpp_int;

/// Number of bits in the binary representation of |c|; bit_length(0) == 0.
inline int bit_length(const Coeff& c) {
  if (c.is_zero()) return 0;
  return static_cast<int>(boost::multiprecision::msb(
             boost::multiprecision::abs(c))) +
         1;
}

}  // namespace qpbf

#endif  // QPBF_COEFF_HPP_
