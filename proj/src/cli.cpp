#include "picard/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "picard/errors.hpp"
#include "picard/report.hpp"
#include "picard/survey.hpp"

namespace picard::cli {

namespace {

std::vector<i64> parse_integers(const std::string& text, std::string_view what) {
  std::vector<i64> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token(text.data() + pos, comma - pos);
    i64 value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw UsageError("malformed " + std::string(what) + " '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

// "p:c0,c1,c2,c3,c4"
InjectedCurve parse_injected(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--inject expects p:c0,c1,c2,c3,c4, got '" + text + "'");
  }
  const auto p = parse_integers(text.substr(0, colon), "--inject prime");
  const auto f = parse_integers(text.substr(colon + 1), "--inject coefficients");
  if (p.size() != 1 || f.size() != 5) {
    throw UsageError("--inject expects p:c0,c1,c2,c3,c4, got '" + text + "'");
  }
  return {p[0], {f[0], f[1], f[2], f[3], f[4]}};
}

struct SweepOptions {
  std::string primes;
  u64 min_p = 5;
  u64 max_p = 50;
  std::string residue = "any";
  u64 trials = 100;
  u64 seed = 1;
  bool require_nonzero_constant = false;
  bool oracle_check = false;
  u64 oracle_bound = kDefaultOracleBound;
  std::vector<std::string> inject;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool timing = false;

  SweepConfig to_config() const {
    SweepConfig c;
    if (!primes.empty()) {
      for (const i64 p : parse_integers(primes, "--primes")) {
        if (p <= 3) throw InvalidField("characteristic must exceed 3, got p=" + std::to_string(p));
        c.primes.explicit_primes.push_back(static_cast<u64>(p));
      }
    }
    c.primes.min_p = min_p;
    c.primes.max_p = max_p;
    if (residue == "1") c.primes.residue_mod_3 = 1;
    else if (residue == "2") c.primes.residue_mod_3 = 2;
    c.trials_per_prime = trials;
    c.seed = seed;
    c.require_nonzero_constant = require_nonzero_constant;
    c.oracle_check = oracle_check;
    c.oracle_bound = oracle_bound;
    for (const auto& s : inject) c.injected.push_back(parse_injected(s));
    c.threads = threads;
    return c;
  }
};

void add_sweep_options(CLI::App* app, SweepOptions& o) {
  app->add_option("--primes", o.primes, "Explicit comma-separated prime list");
  app->add_option("--min-p", o.min_p, "Smallest prime of the range")->capture_default_str();
  app->add_option("--max-p", o.max_p, "Largest prime of the range")->capture_default_str();
  app->add_option("--residue", o.residue, "Keep primes with this residue mod 3")
      ->check(CLI::IsMember({"1", "2", "any"}))
      ->capture_default_str();
  app->add_option("--trials", o.trials, "Random curves per prime")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--seed", o.seed, "64-bit master seed")->capture_default_str();
  app->add_flag("--require-nonzero-constant", o.require_nonzero_constant,
                "Only sample quartics with f(0) != 0");
  app->add_option("--oracle-bound", o.oracle_bound, "Largest prime the bivariate oracle accepts")
      ->capture_default_str();
  app->add_option("--inject", o.inject, "Extra curve p:c0,c1,c2,c3,c4 (repeatable)");
  app->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::ios_base::failure("cannot open " + path + " for writing");
  file << text;
  if (!file) throw std::ios_base::failure("write to " + path + " failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hasse-Witt matrix, a-number and p-rank of Picard curves y^3 = f(x)", "picard"};
  app.require_subcommand(1, 1);

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");

  i64 p = 0;
  std::string f_text;
  std::string convention_name = "hasse-witt";

  auto curve_options = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Prime characteristic > 3")->required();
    sub->add_option("--f", f_text, "Coefficients c0,c1,c2,c3,c4 of f, constant first")
        ->required();
    sub->fallthrough();
  };
  CLI::App* matrix = app.add_subcommand("matrix", "Print the Hasse-Witt (or Cartier) matrix");
  curve_options(matrix);
  matrix->add_option("--convention", convention_name, "Matrix convention")
      ->check(CLI::IsMember({"hasse-witt", "cartier"}))
      ->capture_default_str();
  CLI::App* a_num = app.add_subcommand("a-number", "Compute the a-number");
  curve_options(a_num);
  CLI::App* prank = app.add_subcommand("p-rank", "Compute the p-rank");
  curve_options(prank);

  SweepOptions sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Classify random curves against the "
                                                    "congruence dichotomy");
  add_sweep_options(sweep_cmd, sweep_opts);
  sweep_cmd->add_flag("--oracle-check", sweep_opts.oracle_check,
                      "Cross-check every curve with p <= oracle bound against the oracle");
  sweep_cmd->add_flag("--timing", sweep_opts.timing, "Include the runtime in the report");
  sweep_cmd->fallthrough();

  SweepOptions oracle_opts;
  oracle_opts.max_p = 31;
  oracle_opts.trials = 50;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle-check", "Compare the fast path against the bivariate oracle");
  add_sweep_options(oracle_cmd, oracle_opts);
  oracle_cmd->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: UsageError: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    const auto curve = [&] { return validate_curve(p, parse_integers(f_text, "--f")); };

    if (matrix->parsed()) {
      const Convention c =
          convention_name == "cartier" ? Convention::Cartier : Convention::HasseWitt;
      emit(serialize(make_result_document(curve(), "matrix", c), format), output_path, out);
    } else if (a_num->parsed()) {
      emit(serialize(make_result_document(curve(), "a-number"), format), output_path, out);
    } else if (prank->parsed()) {
      emit(serialize(make_result_document(curve(), "p-rank"), format), output_path, out);
    } else if (sweep_cmd->parsed()) {
      const SweepReport report = sweep(sweep_opts.to_config());
      emit(serialize(report, format, sweep_opts.timing), output_path, out);
      err << "sweep finished in " << report.runtime_seconds << " s\n";
    } else if (oracle_cmd->parsed()) {
      const SweepConfig config = oracle_opts.to_config();
      const auto mismatches = oracle_equivalence_run(config);
      emit(serialize_mismatches(config, mismatches, format), output_path, out);
      if (!mismatches.empty()) return kExitDomain;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace picard::cli
