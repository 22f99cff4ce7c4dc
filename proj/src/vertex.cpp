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

#include "qpbf/vertex.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpbf {

Vertex Vertex::zeros(int n) {
  if (n < 0) throw std::invalid_argument("vertex size must be nonnegative");
  Vertex v;
  v.bits_.assign(static_cast<std::size_t>(n), 0);
  return v;
}

Vertex Vertex::ones(int n) {
  Vertex v = zeros(n);
  std::fill(v.bits_.begin(), v.bits_.end(), std::uint8_t{1});
  return v;
}

Vertex Vertex::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty vertex string");
  Vertex v;
  v.bits_.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("vertex string must contain only 0 and 1");
    }
    v.bits_.push_back(c == '1' ? 1 : 0);
  }
  return v;
}

int Vertex::popcount() const {
  int count = 0;
  for (std::uint8_t b : bits_) count += b;
  return count;
}

std::string Vertex::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k]) s[k] = '1';
  }
  return s;
}

std::size_t Vertex::check_index(int i) const {
  if (i < 1 || i > size()) {
    throw std::out_of_range("vertex index out of range");
  }
  return static_cast<std::size_t>(i - 1);
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  // FNV-1a over the coordinate bytes.
  std::size_t h = 1469598103934665603ULL;
  for (int i = 1; i <= v.size(); ++i) {
    h ^= static_cast<std::size_t>(v.bit(i) ? 1 : 0) + 2;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace qpbf
