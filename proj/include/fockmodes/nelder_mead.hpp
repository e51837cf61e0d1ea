#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace fockmodes {

struct NelderMeadOptions {
  int max_iterations = 4000;
  double tolerance = 1e-10;  // stop once max f - min f over the simplex is below this
  double step = 0.3;         // initial simplex edge along each axis
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
  std::vector<double> best_trace;  // best vertex value after each iteration
};

/// Downhill simplex minimization with reflection 1, expansion 2,
/// contraction 0.5 and shrink 0.5.
template <typename Objective>
NelderMeadResult nelder_mead(Objective&& f, std::vector<double> x0,
                             const NelderMeadOptions& opts = {}) {
  const std::size_t n = x0.size();
  NelderMeadResult res;

  auto eval = [&](const std::vector<double>& x) {
    const double v = f(std::span<const double>(x));
    ++res.evaluations;
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "objective returned " << v << " at (";
      for (std::size_t i = 0; i < x.size(); ++i) msg << (i ? ", " : "") << x[i];
      msg << ")";
      throw NumericalError(msg.str());
    }
    return v;
  };

  if (n == 0) throw DimensionError("nelder_mead needs at least one variable");
  for (double v : x0) {
    if (!std::isfinite(v)) throw NumericalError("non-finite starting point");
  }

  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> v2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s2[i] = std::move(simplex[order[i]]);
      v2[i] = values[order[i]];
    }
    simplex.swap(s2);
    values.swap(v2);
  };

  auto along = [&](double t, const std::vector<double>& from, std::vector<double>& out) {
    // out = centroid + t * (centroid - from)
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + t * (centroid[k] - from[k]);
  };

  // A small spread can also mean the vertices straddle the minimum at equal
  // heights (e.g. 3 +- 0.3 on (x - 3)^2). Probe the simplex centroid first.
  auto settled = [&] {
    if (values[n] - values[0] >= opts.tolerance) return false;
    std::fill(trial.begin(), trial.end(), 0.0);
    for (const auto& v : simplex)
      for (std::size_t k = 0; k < n; ++k) trial[k] += v[k] / static_cast<double>(n + 1);
    const double ft = eval(trial);
    if (ft >= values[0] - opts.tolerance) return true;
    ++res.iterations;
    simplex[n] = trial;
    values[n] = ft;
    sort_simplex();
    res.best_trace.push_back(values[0]);
    return false;
  };

  sort_simplex();
  while (res.iterations < opts.max_iterations) {
    if (settled()) {
      res.converged = true;
      break;
    }
    if (values[n] - values[0] < opts.tolerance) continue;
    ++res.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
    for (double& c : centroid) c /= static_cast<double>(n);

    const auto& worst = simplex[n];
    along(1.0, worst, trial);
    const double fr = eval(trial);

    if (fr < values[0]) {
      along(2.0, worst, trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[n] = trial2;
        values[n] = fe;
      } else {
        simplex[n] = trial;
        values[n] = fr;
      }
    } else if (fr < values[n - 1]) {
      simplex[n] = trial;
      values[n] = fr;
    } else {
      bool accepted = false;
      if (fr < values[n]) {
        along(0.5, worst, trial2);  // outside contraction
        const double fc = eval(trial2);
        if (fc <= fr) {
          simplex[n] = trial2;
          values[n] = fc;
          accepted = true;
        }
      } else {
        along(-0.5, worst, trial2);  // inside contraction
        const double fc = eval(trial2);
        if (fc < values[n]) {
          simplex[n] = trial2;
          values[n] = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t k = 0; k < n; ++k) {
            simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
          }
          values[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
    res.best_trace.push_back(values[0]);
  }
  if (!res.converged && values[n] - values[0] < opts.tolerance) res.converged = true;

  res.x = simplex[0];
  res.value = values[0];
  return res;
}

}  // namespace fockmodes
