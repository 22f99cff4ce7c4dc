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

#ifndef QPBF_VERTEX_HPP_
#define QPBF_VERTEX_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qpbf {

/// A vertex of the boolean hypercube {0,1}^n. Coordinates are indexed
/// 1..n to match the usual x_1..x_n notation; to_string() prints the
/// coordinates in that order, e.g. "110" has x_1 = x_2 = 1 and x_3 = 0.
class Vertex {
 public:
  Vertex() = default;

  static Vertex zeros(int n);
  static Vertex ones(int n);
  /// Parses a 0/1 string, e.g. "0110". Throws std::invalid_argument on any
  /// other character or an empty string.
  static Vertex from_string(std::string_view s);

  int size() const { return static_cast<int>(bits_.size()); }
  bool bit(int i) const { return bits_[check_index(i)] != 0; }
  void set_bit(int i, bool value) {
    bits_[check_index(i)] = value ? 1 : 0;
  }
  void flip(int i) { bits_[check_index(i)] ^= 1; }
  int popcount() const;

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  // Lexicographic on the coordinate string; used to order sink listings.
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

 private:
  std::size_t check_index(int i) const;

  std::vector<std::uint8_t> bits_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

}  // namespace qpbf

#endif  // QPBF_VERTEX_HPP_
