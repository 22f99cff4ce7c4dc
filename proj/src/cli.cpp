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

#include "qpbf/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qpbf/errors.hpp"
#include "qpbf/io.hpp"
#include "qpbf/oracle.hpp"
#include "qpbf/verify.hpp"

namespace qpbf {

namespace {

// Maps the library's exceptions onto the documented exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const infeasible_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInfeasible;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
}

FamilyInstance build_member(Family family, int n, MMode mode, int threshold) {
  return family == Family::kF ? build_f(n, mode, threshold)
                              : build_g(n, mode, threshold);
}

void print_report(std::ostream& out, const ClaimReport& report) {
  out << claim_name(report.claim_id) << " n=" << report.n
      << " checked=" << report.checked_points
      << (report.passed ? " PASS" : " FAIL");
  if (report.counterexample.has_value()) {
    out << " counterexample=" << report.counterexample->to_string();
  }
  out << "\n";
  if (!report.note.empty()) {
    out << "  note: " << report.note << "\n";
  }
}

}  // namespace

VerifyScope parse_verify_scope(std::string_view token) {
  if (token == "lemma2" || token == "reachability") {
    return VerifyScope::kReachability;
  }
  if (token == "claims") return VerifyScope::kClaims;
  if (token == "table") return VerifyScope::kTable;
  if (token == "greedy") return VerifyScope::kGreedy;
  if (token == "bits") return VerifyScope::kBits;
  throw std::invalid_argument("unknown verify scope: " + std::string(token));
}

int cmd_generate(const GenerateArgs& args, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const FamilyInstance inst =
        build_member(args.family, args.n, args.m_mode, args.exact_threshold);
    const std::string text = serialize_instance(inst);
    if (args.out_path.empty()) {
      out << text;
    } else {
      write_text_file(args.out_path, text);
      out << "wrote " << args.out_path << "\n";
    }
    return exit_code::kOk;
  });
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ParsedInstance parsed = load_instance(args.instance_path);
    const QpbFunction& f = parsed.function;
    const Trace trace = run_search(f, Vertex::zeros(f.num_vars()), args.rule,
                                   args.step_limit);
    if (!args.trace_out.empty()) {
      save_trace(args.trace_out, trace);
    }
    out << "steps=" << trace.steps.size() << " end=" << trace.end.to_string()
        << " ties=" << trace.tie_events.size() << "\n";
    if (trace.terminated == Terminated::kStepLimit) {
      err << "note: step limit reached before a local maximum\n";
    }
    return exit_code::kOk;
  });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    switch (args.scope) {
      case VerifyScope::kReachability: {
        const FamilyInstance inst =
            build_f(args.n, args.m_mode, args.exact_threshold);
        const ImprovementGraphSummary summary =
            reachable_from(inst.function, Vertex::zeros(args.n));
        const bool ok = summary.reachable_sinks.size() == 1 &&
                        summary.reachable_sinks.front() ==
                            Vertex::ones(args.n);
        out << "reachable sinks: " << summary.reachable_sinks.size() << " (";
        if (ok) {
          out << "all-ones";
        } else {
          for (std::size_t k = 0; k < summary.reachable_sinks.size(); ++k) {
            if (k > 0) out << ", ";
            out << summary.reachable_sinks[k].to_string();
          }
        }
        out << ") " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? exit_code::kOk : exit_code::kCheckFailed;
      }

      case VerifyScope::kClaims: {
        const FamilyInstance inst =
            build_f(args.n, args.m_mode, args.exact_threshold);
        bool all = true;
        for (const ClaimReport& report : check_all_claims(inst)) {
          print_report(out, report);
          all = all && report.passed;
        }
        return all ? exit_code::kOk : exit_code::kCheckFailed;
      }

      case VerifyScope::kTable: {
        const FamilyInstance inst =
            build_f(args.n, args.m_mode, args.exact_threshold);
        bool all = true;
        for (const ClaimReport& report : check_table_signs(inst)) {
          print_report(out, report);
          all = all && report.passed;
        }
        return all ? exit_code::kOk : exit_code::kCheckFailed;
      }

      case VerifyScope::kGreedy: {
        const FamilyInstance inst =
            build_g(args.n, args.m_mode, args.exact_threshold);
        const Trace trace = run_search(inst.function, Vertex::zeros(args.n),
                                       PivotRule::best());
        const auto [ties, endpoint] = check_greedy(inst);
        const bool ok = ties.passed && endpoint.passed;
        out << "ties=" << trace.tie_events.size() << " endpoint "
            << (trace.end == greedy_endpoint(args.n) ? "matches" : "mismatch")
            << " " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? exit_code::kOk : exit_code::kCheckFailed;
      }

      case VerifyScope::kBits: {
        const ClaimReport report = check_bit_growth(args.n, args.m_mode);
        print_report(out, report);
        return report.passed ? exit_code::kOk : exit_code::kCheckFailed;
      }
    }
    throw std::invalid_argument("unknown verify scope");
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (args.n_min < 2 || args.n_min % 4 != 2 || args.n_max < args.n_min) {
      throw std::invalid_argument(
          "sizes must satisfy 2 <= n_min <= n_max with n_min = 2, 6, 10, ...");
    }
    std::vector<PivotRule> rules = args.rules;
    if (rules.empty()) rules.push_back(PivotRule::first_ascending());
    for (const PivotRule& rule : rules) validate(rule);

    std::ostringstream csv;
    csv << "n,rule,steps,bits,wall_ms\n";
    for (int n = args.n_min; n <= args.n_max; n += 4) {
      const FamilyInstance inst =
          build_member(args.family, n, args.m_mode, args.exact_threshold);
      const int bits = max_coefficient_bits(inst);
      for (const PivotRule& rule : rules) {
        const auto t0 = std::chrono::steady_clock::now();
        const Trace trace = run_search(inst.function, Vertex::zeros(n), rule,
                                       args.step_limit);
        const auto t1 = std::chrono::steady_clock::now();
        const double wall_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        const Coeff steps = trace.steps.size();
        if (trace.terminated != Terminated::kLocalMax) {
          err << "error: n=" << n << " rule=" << rule_name(rule)
              << " hit the step limit before a local maximum\n";
          return exit_code::kCheckFailed;
        }
        const Coeff fourth = steps * steps * steps * steps;
        if (fourth < (Coeff(1) << n)) {
          err << "error: n=" << n << " rule=" << rule_name(rule)
              << " finished in " << steps.str()
              << " steps, below the 2^(n/4) bound\n";
          return exit_code::kCheckFailed;
        }
        csv << n << "," << rule_name(rule) << "," << steps << "," << bits
            << "," << std::fixed << std::setprecision(3) << wall_ms << "\n";
      }
    }
    if (args.csv_out.empty()) {
      out << csv.str();
    } else {
      write_text_file(args.csv_out, csv.str());
      out << "wrote " << args.csv_out << "\n";
    }
    return exit_code::kOk;
  });
}

}  // namespace qpbf
