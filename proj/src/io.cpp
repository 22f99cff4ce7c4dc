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

#include "qpbf/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpbf/errors.hpp"
#include "qpbf/state.hpp"

namespace qpbf {

namespace {

// Splits on single spaces/tabs; multiple separators collapse.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

bool looks_like_integer(const std::string& token) {
  std::size_t start = token[0] == '-' ? 1 : 0;
  if (start == token.size()) return false;
  for (std::size_t k = start; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) return false;
  }
  return true;
}

Coeff parse_coeff(const std::string& token, std::size_t line_no) {
  if (token.empty() || !looks_like_integer(token)) {
    throw parse_error("line " + std::to_string(line_no) +
                      ": not an integer: '" + token + "'");
  }
  return Coeff(token);
}

int parse_index(const std::string& token, int n, std::size_t line_no) {
  Coeff value = parse_coeff(token, line_no);
  if (value < 1 || value > n) {
    throw parse_error("line " + std::to_string(line_no) +
                      ": index out of range: " + token);
  }
  return static_cast<int>(value);
}

std::uint64_t parse_u64(const std::string& token, std::size_t line_no) {
  Coeff value = parse_coeff(token, line_no);
  if (value < 0 || value > Coeff(UINT64_MAX)) {
    throw parse_error("line " + std::to_string(line_no) +
                      ": out of range: " + token);
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("short write to " + path);
}

const char* terminated_token(Terminated t) {
  return t == Terminated::kLocalMax ? "LocalMax" : "StepLimit";
}

}  // namespace

std::string serialize_instance(const QpbFunction& f,
                               const InstanceMetadata& meta) {
  std::ostringstream os;
  os << "qpbf " << f.num_vars() << "\n";
  if (meta.family.has_value()) {
    os << "# family " << to_string(*meta.family) << "\n";
  }
  if (meta.m_mode.has_value()) {
    os << "# m_mode " << to_string(*meta.m_mode) << "\n";
  }
  if (!meta.m_sequence.empty()) {
    os << "# m_sequence";
    for (const Coeff& m : meta.m_sequence) os << " " << m;
    os << "\n";
  }
  for (int i = 1; i <= f.num_vars(); ++i) {
    if (!f.linear(i).is_zero()) {
      os << i << " " << f.linear(i) << "\n";
    }
  }
  for (const auto& [key, c] : f.quadratic_terms()) {
    os << key.first << " " << key.second << " " << c << "\n";
  }
  return os.str();
}

std::string serialize_instance(const FamilyInstance& inst) {
  InstanceMetadata meta;
  meta.family = inst.family;
  meta.m_mode = inst.m_mode;
  meta.m_sequence = inst.m_sequence;
  return serialize_instance(inst.function, meta);
}

ParsedInstance parse_instance(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  std::size_t ln = 0;

  // Header.
  std::optional<int> n;
  while (ln < lines.size()) {
    const auto tokens = tokenize(lines[ln]);
    ++ln;
    if (tokens.empty()) continue;
    if (tokens.size() != 2 || tokens[0] != "qpbf") {
      throw parse_error("line " + std::to_string(ln) +
                        ": expected header 'qpbf <n>'");
    }
    Coeff value = parse_coeff(tokens[1], ln);
    if (value < 1 || value > 1000000) {
      throw parse_error("line " + std::to_string(ln) +
                        ": unreasonable variable count");
    }
    n = static_cast<int>(value);
    break;
  }
  if (!n.has_value()) throw parse_error("missing 'qpbf <n>' header");

  QpbFunction f(*n);
  InstanceMetadata meta;
  std::vector<bool> linear_seen(static_cast<std::size_t>(*n) + 1, false);
  std::set<std::pair<int, int>> quad_seen;

  for (; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    const auto tokens = tokenize(lines[ln]);
    if (tokens.empty()) continue;
    if (tokens[0] == "#" || tokens[0][0] == '#') {
      // Metadata comments; unknown keys are ignored.
      std::vector<std::string> rest(tokens.begin() + (tokens[0] == "#" ? 1 : 0),
                                    tokens.end());
      if (tokens[0] != "#" && !rest.empty()) rest[0] = rest[0].substr(1);
      if (rest.empty() || rest[0].empty()) continue;
      if (rest[0] == "family" && rest.size() == 2) {
        meta.family = parse_family(rest[1]);
      } else if (rest[0] == "m_mode" && rest.size() == 2) {
        meta.m_mode = parse_m_mode(rest[1]);
      } else if (rest[0] == "m_sequence") {
        for (std::size_t k = 1; k < rest.size(); ++k) {
          meta.m_sequence.push_back(parse_coeff(rest[k], line_no));
        }
      }
      continue;
    }
    if (tokens.size() == 2) {
      const int i = parse_index(tokens[0], *n, line_no);
      if (linear_seen[static_cast<std::size_t>(i)]) {
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate linear term for " + tokens[0]);
      }
      linear_seen[static_cast<std::size_t>(i)] = true;
      f.add_linear(i, parse_coeff(tokens[1], line_no));
    } else if (tokens.size() == 3) {
      const int i = parse_index(tokens[0], *n, line_no);
      const int j = parse_index(tokens[1], *n, line_no);
      if (i >= j) {
        throw parse_error("line " + std::to_string(line_no) +
                          ": quadratic term needs i < j");
      }
      if (!quad_seen.insert({i, j}).second) {
        throw parse_error("line " + std::to_string(line_no) +
                          ": duplicate quadratic term " + tokens[0] + " " +
                          tokens[1]);
      }
      f.add_quadratic(i, j, parse_coeff(tokens[2], line_no));
    } else {
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected 2 or 3 fields, got " +
                        std::to_string(tokens.size()));
    }
  }
  return ParsedInstance{std::move(f), std::move(meta)};
}

ParsedInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

void save_instance(const std::string& path, const QpbFunction& f,
                   const InstanceMetadata& meta) {
  write_file(path, serialize_instance(f, meta));
}

std::string serialize_trace(const Trace& trace) {
  std::ostringstream os;
  os << "trace " << trace.start.size() << " " << rule_name(trace.rule) << " "
     << trace.rule.seed << "\n";
  os << trace.start.to_string() << "\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    os << (k + 1) << " " << step.flipped_index << " " << step.gain << " "
       << step.value_after << "\n";
  }
  os << "end " << trace.end.to_string() << " "
     << terminated_token(trace.terminated) << "\n";
  return os.str();
}

Trace parse_trace(std::string_view text) {
  const std::vector<std::string_view> lines = split_lines(text);
  std::size_t ln = 0;

  auto next_tokens = [&]() -> std::vector<std::string> {
    while (ln < lines.size()) {
      auto tokens = tokenize(lines[ln]);
      ++ln;
      if (!tokens.empty()) return tokens;
    }
    throw parse_error("unexpected end of trace file");
  };

  const auto header = next_tokens();
  if (header.size() != 4 || header[0] != "trace") {
    throw parse_error("expected header 'trace <n> <rule> <seed>'");
  }
  const int n = static_cast<int>(parse_coeff(header[1], 1));
  if (n < 1) throw parse_error("bad size in trace header");
  const std::uint64_t seed = parse_u64(header[3], 1);
  PivotRule rule;
  try {
    rule = parse_rule(header[2], seed);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("bad rule in trace header: ") + e.what());
  }

  const auto start_tokens = next_tokens();
  if (start_tokens.size() != 1) {
    throw parse_error("expected start vertex bit string");
  }
  Vertex start;
  try {
    start = Vertex::from_string(start_tokens[0]);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("bad start vertex: ") + e.what());
  }
  if (start.size() != n) {
    throw parse_error("start vertex length does not match header size");
  }

  Trace trace{rule, start, {}, start, Terminated::kLocalMax, {}};
  for (;;) {
    const std::size_t line_no = ln + 1;
    const auto tokens = next_tokens();
    if (tokens[0] == "end") {
      if (tokens.size() != 3) {
        throw parse_error("expected footer 'end <bitstring> <status>'");
      }
      try {
        trace.end = Vertex::from_string(tokens[1]);
      } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad end vertex: ") + e.what());
      }
      if (trace.end.size() != n) {
        throw parse_error("end vertex length does not match header size");
      }
      if (tokens[2] == "LocalMax") {
        trace.terminated = Terminated::kLocalMax;
      } else if (tokens[2] == "StepLimit") {
        trace.terminated = Terminated::kStepLimit;
      } else {
        throw parse_error("unknown termination status: " + tokens[2]);
      }
      break;
    }
    if (tokens.size() != 4) {
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected '<step#> <index> <gain> <value>'");
    }
    const std::uint64_t step_no = parse_u64(tokens[0], line_no);
    if (step_no != trace.steps.size() + 1) {
      throw parse_error("line " + std::to_string(line_no) +
                        ": step numbers must be 1, 2, 3, ...");
    }
    TraceStep step;
    step.flipped_index = parse_index(tokens[1], n, line_no);
    step.gain = parse_coeff(tokens[2], line_no);
    step.value_after = parse_coeff(tokens[3], line_no);
    trace.steps.push_back(std::move(step));
  }
  // Anything after the footer other than blank lines is an error.
  for (; ln < lines.size(); ++ln) {
    if (!tokenize(lines[ln]).empty()) {
      throw parse_error("unexpected content after trace footer");
    }
  }
  return trace;
}

Trace load_trace(const std::string& path) {
  return parse_trace(read_file(path));
}

void save_trace(const std::string& path, const Trace& trace) {
  write_file(path, serialize_trace(trace));
}

void write_text_file(const std::string& path, const std::string& content) {
  write_file(path, content);
}

void validate_trace(const QpbFunction& f, const Trace& trace) {
  if (trace.start.size() != f.num_vars()) {
    throw validation_error("trace dimension does not match instance");
  }
  SearchState s = make_state(f, trace.start);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    const std::string at = "step " + std::to_string(k + 1);
    if (step.gain <= 0) {
      throw validation_error(at + ": gain is not strictly positive");
    }
    const Coeff expected = state_flip_gain(s, step.flipped_index);
    if (expected != step.gain) {
      throw validation_error(at + ": recorded gain " + step.gain.str() +
                             " differs from actual " + expected.str());
    }
    apply_flip(s, f, step.flipped_index);
    if (s.value != step.value_after) {
      throw validation_error(at + ": recorded value " +
                             step.value_after.str() +
                             " differs from actual " + s.value.str());
    }
  }
  if (s.vertex != trace.end) {
    throw validation_error("final vertex does not match the footer");
  }
  if (trace.terminated == Terminated::kLocalMax &&
      !is_local_max(f, s.vertex)) {
    throw validation_error("footer says LocalMax but improving moves remain");
  }
}

}  // namespace qpbf
