#pragma once

#include <numbers>
#include <random>
#include <vector>

#include "mode_unitary.hpp"
#include "occupation.hpp"
#include "pure_state.hpp"

/// Seeded generators for randomized checks.
namespace fockmodes::random {

using Engine = std::mt19937_64;

inline std::vector<double> uniform_params(Engine& rng, int modes) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(modes * modes));
  for (double& t : theta) t = dist(rng);
  return theta;
}

inline ModeUnitary unitary(Engine& rng, int modes) {
  return exp_map(HermitianParams(modes, uniform_params(rng, modes)));
}

/// Normalized state on `modes` modes with a random subset of occupations
/// drawn from the given photon-number sectors and Gaussian amplitudes.
inline PureState state(Engine& rng, int modes, const std::vector<int>& totals) {
  std::normal_distribution<double> gauss;
  std::bernoulli_distribution keep(0.6);
  PureState::AmplitudeMap amps;
  for (int n : totals) {
    for (const auto& occ : enumerate_sector(modes, n)) {
      if (keep(rng)) amps.emplace(occ, Complex{gauss(rng), gauss(rng)});
    }
  }
  if (amps.empty()) {
    amps.emplace(enumerate_sector(modes, totals.front()).front(), Complex{1.0, 0.0});
  }
  return normalize(PureState(modes, std::move(amps)));
}

/// Random state with 2..max_modes modes and 1..max_total photons; with
/// probability 1/3 two sectors are mixed.
inline PureState small_state(Engine& rng, int max_modes = 4, int max_total = 3) {
  std::uniform_int_distribution<int> mdist(2, max_modes);
  std::uniform_int_distribution<int> ndist(0, max_total);
  const int m = mdist(rng);
  std::vector<int> totals{std::max(1, ndist(rng))};
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
    const int other = ndist(rng);
    if (other != totals.front()) totals.push_back(other);
  }
  return state(rng, m, totals);
}

}  // namespace fockmodes::random
