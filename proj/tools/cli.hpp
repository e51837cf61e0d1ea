#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fockmodes/fockmodes.hpp"
#include "fockmodes/report.hpp"
#include "fockmodes/validation_suite.hpp"

namespace fockmodes::cli {

enum ExitCode : int {
  kOk = 0,
  kSuiteMismatch = 1,
  kUsage = 2,
  kParse = 3,
  kNumerical = 4,
};

namespace detail {

struct InputError : Error {
  InputError(const std::string& what, int code) : Error(what), code(code) {}
  int code;
};

inline PureState read_state(const std::string& text) {
  try {
    return parse_state(text);
  } catch (const Error& e) {
    throw InputError(std::string("state: ") + e.what(), kParse);
  }
}

inline Partition read_partition(const std::string& text, const PureState& s) {
  try {
    Partition p = parse_partition(text);
    p.check_modes(s.mode_count());
    return p;
  } catch (const Error& e) {
    throw InputError(std::string("partition: ") + e.what(), kUsage);
  }
}

inline ModeUnitary read_unitary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open unitary file " + path, kUsage);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_unitary_file(buf.str());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what(), kParse);
  }
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mode entanglement of bosonic Fock states under linear-optical mode redefinitions",
               "fockmodes"};
  app.require_subcommand(1);

  std::string state_text, partition_text, unitary_path, direction = "min";
  bool json = false;
  int restarts = 24, precision = 7, max_iterations = 4000;
  std::uint64_t seed = 0;
  bool ten_modes = false;

  auto* entropy = app.add_subcommand("entropy", "Schmidt spectrum and entropy across a partition");
  entropy->add_option("state", state_text, "ket expression, e.g. \"|01>+|10>\"")->required();
  entropy->add_option("--partition", partition_text, "mode split, e.g. 0,1|2,3")->required();
  entropy->add_flag("--json", json, "print JSON");

  auto* transform = app.add_subcommand("transform", "rewrite a state in redefined modes");
  transform->add_option("state", state_text, "ket expression")->required();
  transform->add_option("--unitary", unitary_path, "JSON unitary file")->required();
  transform->add_option("--precision", precision, "digits after the decimal point")
      ->check(CLI::Range(1, 15));

  auto* optimize = app.add_subcommand("optimize", "extremize entropy over mode redefinitions");
  optimize->add_option("state", state_text, "ket expression")->required();
  optimize->add_option("--partition", partition_text, "mode split")->required();
  optimize->add_option("--direction", direction, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  optimize->add_option("--restarts", restarts, "number of restarts")->check(CLI::PositiveNumber);
  optimize->add_option("--seed", seed, "seed for restart starting points");
  optimize->add_option("--max-iterations", max_iterations, "simplex iterations per restart")
      ->check(CLI::PositiveNumber);
  optimize->add_flag("--json", json, "print JSON");

  auto* rank = app.add_subcommand("rank-bound", "Schmidt rank bound over all redefinitions");
  rank->add_option("state", state_text, "ket expression")->required();
  rank->add_option("--partition", partition_text, "mode split")->required();
  rank->add_flag("--json", json, "print JSON");

  auto* suite_cmd = app.add_subcommand("paper-suite", "run the reference table of checks");
  suite_cmd->add_flag("--json", json, "print JSON");
  suite_cmd->add_option("--seed", seed, "optimizer seed");
  suite_cmd->add_flag("--ten-modes", ten_modes, "include the 10-mode conjecture check");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*suite_cmd) {
      suite::Options opts;
      opts.seed = seed;
      opts.include_ten_modes = ten_modes;
      const auto checks = suite::run(opts);
      if (json) {
        out << suite::to_json(checks, opts).dump(2) << "\n";
      } else {
        out << suite::to_table(checks);
        const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed(); });
        out << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " checks passed\n";
      }
      err << "paper-suite: " << detail::elapsed_ms(start) / 1000.0 << " s\n";
      return suite::all_passed(checks) ? kOk : kSuiteMismatch;
    }

    const PureState s = detail::read_state(state_text);

    if (*transform) {
      const ModeUnitary u = detail::read_unitary(unitary_path);
      if (u.dim() != s.mode_count()) {
        throw detail::InputError("unitary has dimension " + std::to_string(u.dim()) +
                                     " but the state has " + std::to_string(s.mode_count()) + " modes",
                                 kUsage);
      }
      out << format_state(apply_redefinition(s, u), precision) << "\n";
      return kOk;
    }

    const Partition p = detail::read_partition(partition_text, s);
    Report report = Report::analyze(state_text, s, p);
    if (*optimize) {
      OptConfig cfg;
      cfg.direction = direction == "max" ? Direction::Max : Direction::Min;
      cfg.restarts = restarts;
      cfg.seed = seed;
      cfg.max_iterations = max_iterations;
      const OptResult r = optimize_entanglement(s, p, cfg);
      report.optimization = Report::Optimization{r.direction, r.best_entropy_bits, r.per_restart_values, seed};
    }
    report.wall_ms = detail::elapsed_ms(start);
    out << (json ? report.to_json().dump(2) + "\n" : report.to_table());
    return kOk;
  } catch (const detail::InputError& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace fockmodes::cli
