#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "entanglement.hpp"
#include "errors.hpp"
#include "mode_unitary.hpp"
#include "nelder_mead.hpp"
#include "redefinition.hpp"

namespace fockmodes {

enum class Direction { Min, Max };

inline const char* to_string(Direction d) { return d == Direction::Min ? "min" : "max"; }

struct OptConfig {
  Direction direction = Direction::Min;
  int restarts = 24;
  std::uint64_t seed = 0;
  int max_iterations = 4000;
  double simplex_tolerance = 1e-10;
  double step_scale = 0.3;
};

struct OptResult {
  Direction direction = Direction::Min;
  double best_entropy_bits = 0.0;
  ModeUnitary best_unitary = ModeUnitary::identity(1);
  HermitianParams best_params = HermitianParams::zeros(1);
  std::vector<double> per_restart_values;
  long long evaluations = 0;
  bool converged = false;
  int best_restart = 0;
};

inline constexpr int kMaxOptimizedModes = 12;
inline constexpr double kVerificationTolerance = 1e-9;

/// theta -> entanglement entropy of the state rewritten in the modes
/// exp(i H(theta)). Keeps a dense coefficient-matrix layout so evaluation
/// does not go through the sparse state map.
class EntropyObjective {
 public:
  EntropyObjective(const PureState& s, const Partition& p) : plan_(s) {
    p.check_modes(s.mode_count());
    std::map<Occupation, Eigen::Index> rows, cols;
    for (const auto& sec : plan_.sectors()) {
      for (const auto& occ : sec.basis) {
        rows.emplace(occ.restrict_to(p.side_a()), 0);
        cols.emplace(occ.restrict_to(p.side_b()), 0);
      }
    }
    Eigen::Index k = 0;
    for (auto& [occ, idx] : rows) idx = k++;
    n_rows_ = k;
    k = 0;
    for (auto& [occ, idx] : cols) idx = k++;
    n_cols_ = k;
    for (const auto& sec : plan_.sectors()) {
      std::vector<std::pair<Eigen::Index, Eigen::Index>> cells;
      cells.reserve(sec.basis.size());
      for (const auto& occ : sec.basis) {
        cells.emplace_back(rows.at(occ.restrict_to(p.side_a())), cols.at(occ.restrict_to(p.side_b())));
      }
      cells_.push_back(std::move(cells));
    }
  }

  int mode_count() const noexcept { return plan_.mode_count(); }
  std::size_t parameter_count() const noexcept {
    return static_cast<std::size_t>(mode_count() * mode_count());
  }

  double entropy_for(const ComplexMatrix& u) const {
    const auto dense = plan_.apply(u);
    double norm2 = 0.0;
    for (const auto& sec : dense)
      for (const auto& a : sec) norm2 += std::norm(a);
    const double scale = 1.0 / std::sqrt(norm2);
    ComplexMatrix c = ComplexMatrix::Zero(n_rows_, n_cols_);
    for (std::size_t s = 0; s < dense.size(); ++s) {
      for (std::size_t i = 0; i < dense[s].size(); ++i) {
        const auto [r, col] = cells_[s][i];
        c(r, col) = dense[s][i] * scale;
      }
    }
    return spectrum_of(c).entropy_bits;
  }

  double operator()(std::span<const double> theta) const {
    return entropy_for(exp_map(mode_count(), theta).matrix());
  }

 private:
  RedefinitionPlan plan_;
  Eigen::Index n_rows_ = 0;
  Eigen::Index n_cols_ = 0;
  std::vector<std::vector<std::pair<Eigen::Index, Eigen::Index>>> cells_;
};

/// Starting point of restart `index`: the identity for restart 0, otherwise
/// uniform in [-pi, pi]^{M^2} from a generator seeded by (seed, index) alone,
/// so a restart's start does not depend on how many restarts run.
inline std::vector<double> restart_start(std::uint64_t seed, int index, std::size_t dim) {
  std::vector<double> x(dim, 0.0);
  if (index == 0) return x;
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  for (double& v : x) v = dist(rng);
  return x;
}

/// Extremizes bipartite entanglement entropy over all mode redefinitions
/// U = exp(iH) with multi-start Nelder-Mead. MAX runs minimize the negated
/// entropy. The returned optimum is re-evaluated through the sparse path.
inline OptResult optimize_entanglement(const PureState& s, const Partition& p,
                                       const OptConfig& cfg) {
  if (cfg.restarts < 1) throw Error("restarts must be at least 1");
  if (!(cfg.simplex_tolerance > 0) || !(cfg.step_scale > 0) || cfg.max_iterations < 1) {
    throw Error("optimizer tolerances and iteration limits must be positive");
  }
  if (s.mode_count() > kMaxOptimizedModes) {
    throw SizeError("optimization limited to " + std::to_string(kMaxOptimizedModes) + " modes");
  }
  p.check_modes(s.mode_count());
  const EntropyObjective objective(s, p);
  const double sign = cfg.direction == Direction::Min ? 1.0 : -1.0;
  auto f = [&](std::span<const double> theta) { return sign * objective(theta); };

  const NelderMeadOptions nm{cfg.max_iterations, cfg.simplex_tolerance, cfg.step_scale};
  OptResult out;
  out.direction = cfg.direction;
  std::vector<double> best_x;
  double best_value = 0.0;
  bool best_converged = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto run = nelder_mead(f, restart_start(cfg.seed, r, objective.parameter_count()), nm);
    out.evaluations += run.evaluations;
    out.per_restart_values.push_back(sign * run.value);
    if (r == 0 || run.value < best_value) {
      best_value = run.value;
      best_x = std::move(run.x);
      best_converged = run.converged;
      out.best_restart = r;
    }
  }

  const int m = s.mode_count();
  out.best_params = HermitianParams(m, best_x);
  out.best_unitary = exp_map(out.best_params);
  out.best_entropy_bits = sign * best_value;
  out.converged = best_converged;

  const double check = schmidt_spectrum(apply_redefinition(s, out.best_unitary), p).entropy_bits;
  if (std::abs(check - out.best_entropy_bits) > kVerificationTolerance) {
    throw NumericalError("optimizer value " + std::to_string(out.best_entropy_bits) +
                         " does not reproduce on re-evaluation (" + std::to_string(check) + ")");
  }
  return out;
}

}  // namespace fockmodes
