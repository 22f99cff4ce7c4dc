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

#ifndef QPBF_IO_HPP_
#define QPBF_IO_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpbf/coeff.hpp"
#include "qpbf/families.hpp"
#include "qpbf/function.hpp"
#include "qpbf/search.hpp"

namespace qpbf {

// Instance file format ("qpbf format"):
//
//   qpbf <n>
//   # family f
//   # m_mode exact
//   # m_sequence 3 123
//   <i> <c_i>          one line per nonzero linear term, ascending i
//   <i> <j> <c_ij>     one line per nonzero quadratic term, i < j, ascending
//
// All integers are decimal with arbitrary precision (coefficients outgrow
// 64 bits around n = 20, which is why no existing interchange format is
// reused). Metadata comments are optional; unknown "#" lines are ignored.
// Serialization is canonical, so equal functions produce identical bytes.

/// Optional provenance carried in the "#" lines of an instance file.
struct InstanceMetadata {
  std::optional<Family> family;
  std::optional<MMode> m_mode;
  std::vector<Coeff> m_sequence;
};

struct ParsedInstance {
  QpbFunction function;
  InstanceMetadata metadata;
};

std::string serialize_instance(const QpbFunction& f,
                               const InstanceMetadata& meta = {});
std::string serialize_instance(const FamilyInstance& inst);

/// Parses the format above. Throws parse_error on malformed input, including
/// out-of-range indices, i >= j pairs, and duplicate term lines.
ParsedInstance parse_instance(std::string_view text);

ParsedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const QpbFunction& f,
                   const InstanceMetadata& meta = {});

// Trace file format:
//
//   trace <n> <rule> <seed>
//   <start bitstring>
//   <step#> <flipped_index> <gain> <value_after>   one line per step
//   end <bitstring> <LocalMax|StepLimit>
//
// Gains and values are stored in full so a third party can audit strict
// monotonicity without this library.

std::string serialize_trace(const Trace& trace);

/// Throws parse_error on malformed input (bad header, bad step numbering,
/// non-positive gain text is accepted here -- content checks belong to
/// validate_trace).
Trace parse_trace(std::string_view text);

Trace load_trace(const std::string& path);
void save_trace(const std::string& path, const Trace& trace);

/// Writes `content` to `path` verbatim (binary mode, no transformations), so
/// callers that serialize to a string keep byte-deterministic files.
void write_text_file(const std::string& path, const std::string& content);

/// Replays the trace against f: every step must flip the recorded index with
/// the recorded strictly-positive gain and reach the recorded value; the
/// final vertex must match the footer, and a LocalMax footer must indeed be
/// a local maximum. Throws validation_error on the first violation.
void validate_trace(const QpbFunction& f, const Trace& trace);

}  // namespace qpbf

#endif  // QPBF_IO_HPP_
