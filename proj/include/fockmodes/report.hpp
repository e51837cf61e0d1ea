#pragma once

#include "json.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "entanglement.hpp"
#include "optimizer.hpp"

namespace fockmodes {

/// Result record printed by the command-line tool. The table and JSON
/// renderings read the same fields.
struct Report {
  struct Optimization {
    Direction direction = Direction::Min;
    double best = 0.0;
    std::vector<double> restart_values;
    std::uint64_t seed = 0;
  };

  std::string input;
  std::string partition;
  std::vector<double> lambdas;
  double entropy_bits = 0.0;
  int rank = 0;
  int rank_bound = 0;
  std::optional<Optimization> optimization;
  double wall_ms = 0.0;

  static Report analyze(std::string input, const PureState& s, const Partition& p) {
    const auto spec = schmidt_spectrum(s, p);
    Report r;
    r.input = std::move(input);
    r.partition = p.to_string();
    r.lambdas = spec.lambdas;
    r.entropy_bits = spec.entropy_bits;
    r.rank = spec.numerical_rank;
    r.rank_bound = fockmodes::rank_bound(s, p);
    return r;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"input", input},   {"partition", partition}, {"lambdas", lambdas},
                        {"entropy_bits", entropy_bits}, {"rank", rank}, {"rank_bound", rank_bound}};
    if (optimization) {
      j["direction"] = to_string(optimization->direction);
      j["best"] = optimization->best;
      j["restart_values"] = optimization->restart_values;
      j["seed"] = optimization->seed;
    }
    j["wall_ms"] = wall_ms;
    return j;
  }

  std::string to_table() const {
    std::string out;
    char buf[128];
    auto line = [&](const char* key, const std::string& value) {
      std::snprintf(buf, sizeof buf, "%-15s", key);
      out += buf + value + "\n";
    };
    auto num = [&](double v) {
      std::snprintf(buf, sizeof buf, "%.6f", v);
      return std::string(buf);
    };
    auto list = [&](const std::vector<double>& values) {
      std::string s;
      for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + num(values[i]);
      return s;
    };
    line("input", input);
    line("partition", partition);
    line("lambdas", list(lambdas));
    line("entropy_bits", num(entropy_bits));
    line("rank", std::to_string(rank));
    line("rank_bound", std::to_string(rank_bound));
    if (optimization) {
      line("direction", to_string(optimization->direction));
      line("best", num(optimization->best));
      line("restart_values", list(optimization->restart_values));
      line("seed", std::to_string(optimization->seed));
    }
    std::snprintf(buf, sizeof buf, "%.1f", wall_ms);
    line("wall_ms", buf);
    return out;
  }
};

}  // namespace fockmodes
