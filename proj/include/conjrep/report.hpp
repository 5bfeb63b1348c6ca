// Analysis and verification drivers behind the command line. Both produce
// deterministic JSON: identical input and options give byte-identical
// reports.

#ifndef CONJREP_REPORT_HPP_
#define CONJREP_REPORT_HPP_

#include <optional>
#include <string>

#include "conjrep/io.hpp"

namespace conjrep {

struct AnalyzeOptions {
  std::string field_spec = "q";  // "q" or "fp:<prime>"
  std::size_t cap = 1'000'000;
  bool skip_reps = false;
  std::optional<std::uint64_t> seed;  // echoed into the report
};

// "q" -> 0; "fp:<p>" -> p, rejecting composite moduli.
std::uint64_t parse_field_spec(const std::string& spec);

std::string input_digest(const std::string& raw_bytes);

// Full pipeline: generate, Green structure, both S-conjugacy methods,
// unit-group conjugacy when an identity exists, representation lifts with
// certificates (unless skipped) and the bijection verdict.
ordered_json run_analysis(const GeneratorInput& input, const AnalyzeOptions& options,
                          const std::string& digest,
                          const json* supplied_reps = nullptr);

std::string human_summary(const ordered_json& report);

struct VerifyOutcome {
  ordered_json report;
  bool all_passed = false;
};

// Executes the whole invariant suite and reports each item individually.
// Oversized checks switch to seeded sampling and say so in their detail.
VerifyOutcome run_verification(const GeneratorInput& input,
                               const AnalyzeOptions& options,
                               const std::string& digest,
                               const json* supplied_reps = nullptr);

}  // namespace conjrep

#endif  // CONJREP_REPORT_HPP_
