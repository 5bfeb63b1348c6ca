#include "conjrep/cli.hpp"

#include <CLI11.hpp>
#include <fstream>

#include "conjrep/builtins.hpp"
#include "conjrep/report.hpp"

namespace conjrep {

namespace {

void write_output(const ordered_json& j, const std::string& path,
                  std::ostream& out, bool echo_to_stdout) {
  const std::string text = j.dump(2) + "\n";
  if (!path.empty()) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write output file: " + path);
    file << text;
  } else if (echo_to_stdout) {
    out << text;
  }
}

struct CommonOptions {
  std::string input_path;
  std::string output_path;
  std::string field = "q";
  std::string reps_path;
  std::size_t cap = 1'000'000;
  bool skip_reps = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

AnalyzeOptions to_analyze_options(const CommonOptions& c) {
  AnalyzeOptions options;
  options.field_spec = c.field;
  options.cap = c.cap;
  options.skip_reps = c.skip_reps;
  if (c.seed_given) options.seed = c.seed;
  return options;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"conjugacy classes and irreducible representations of finite "
               "inverse semigroups of partial permutations"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  auto* analyze = app.add_subcommand(
      "analyze", "run the full pipeline and emit an analysis report");
  analyze->add_option("--input", analyze_opts.input_path, "generator file (JSON)")
      ->required();
  analyze->add_option("--output", analyze_opts.output_path, "report file (JSON)");
  analyze->add_option("--field", analyze_opts.field, "q or fp:<prime>");
  analyze->add_option("--reps", analyze_opts.reps_path,
                      "supplied representations file (JSON)");
  analyze->add_option("--cap", analyze_opts.cap, "element cap for generation");
  analyze
      ->add_option("--seed", analyze_opts.seed, "seed echoed into the report")
      ->each([&](const std::string&) { analyze_opts.seed_given = true; });
  analyze->add_flag("--skip-reps", analyze_opts.skip_reps,
                    "skip the representation pipeline");

  CommonOptions verify_opts;
  auto* verify = app.add_subcommand(
      "verify", "run the invariant suite and report each item");
  verify->add_option("--input", verify_opts.input_path, "generator file (JSON)")
      ->required();
  verify->add_option("--output", verify_opts.output_path, "report file (JSON)");
  verify->add_option("--field", verify_opts.field, "q or fp:<prime>");
  verify->add_option("--reps", verify_opts.reps_path,
                     "supplied representations file (JSON)");
  verify->add_option("--cap", verify_opts.cap, "element cap for generation");
  verify->add_option("--seed", verify_opts.seed, "seed for sampled checks")
      ->each([&](const std::string&) { verify_opts.seed_given = true; });

  std::string builtin_name;
  std::string builtin_output;
  std::uint64_t builtin_seed = 0;
  auto* builtin = app.add_subcommand(
      "builtin", "emit a canonical generator file (rook-n, sym-n, chain-n, "
                 "random-n)");
  builtin->add_option("name", builtin_name, "family name, e.g. rook-3")
      ->required();
  builtin->add_option("--output", builtin_output, "generator file to write");
  builtin->add_option("--seed", builtin_seed, "seed for the random family");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (builtin->parsed()) {
      const auto input = builtin_generators(builtin_name, builtin_seed);
      write_output(generator_input_to_json(input), builtin_output, out, true);
      return kExitOk;
    }

    const CommonOptions& c = analyze->parsed() ? analyze_opts : verify_opts;
    std::string raw;
    const auto input = load_generator_file(c.input_path, &raw);
    const std::string digest = input_digest(raw);
    json reps_json;
    const json* reps_ptr = nullptr;
    if (!c.reps_path.empty()) {
      reps_json = parse_json_text(read_file(c.reps_path),
                                  "representations file " + c.reps_path);
      reps_ptr = &reps_json;
    }

    if (analyze->parsed()) {
      const auto report =
          run_analysis(input, to_analyze_options(c), digest, reps_ptr);
      write_output(report, c.output_path, out, false);
      out << human_summary(report);
      return kExitOk;
    }

    const auto outcome =
        run_verification(input, to_analyze_options(c), digest, reps_ptr);
    for (const auto& item : outcome.report.at("invariants")) {
      out << item.at("status").get<std::string>() << " "
          << item.at("name").get<std::string>();
      if (item.contains("detail")) {
        out << " (" << item.at("detail").get<std::string>() << ")";
      }
      out << "\n";
    }
    write_output(outcome.report, c.output_path, out, false);
    return outcome.all_passed ? kExitOk : kExitInvariantFailed;
  } catch (const CapacityError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitCapError;
  } catch (const GuardError& e) {
    err << "guard failure: " << e.what() << "\n";
    return kExitGuardError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace conjrep
