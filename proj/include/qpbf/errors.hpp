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

#ifndef QPBF_ERRORS_HPP_
#define QPBF_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qpbf {

/// Thrown when an exact-mode computation would require enumerating more
/// vertices than the configured threshold allows.
class infeasible_error : public std::runtime_error {
 public:
  explicit infeasible_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

/// Thrown when a serialized instance or trace file is malformed.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

/// Thrown when a structurally well-formed trace fails replay validation
/// against its instance (wrong gain, wrong running value, bad endpoint, ...).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace qpbf

#endif  // QPBF_ERRORS_HPP_
