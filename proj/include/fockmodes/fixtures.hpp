#pragma once

#include <cmath>
#include <complex>

#include "mode_unitary.hpp"
#include "pure_state.hpp"

/// Named states and mode transformations used by the test suites and the
/// `paper-suite` command.
namespace fockmodes::fixtures {

inline PureState make_state(int modes, std::initializer_list<std::pair<Occupation, Complex>> terms) {
  PureState::AmplitudeMap amps;
  for (const auto& [occ, a] : terms) amps[occ] += a;
  return normalize(PureState(modes, std::move(amps)));
}

/// (|01> + |10>)/sqrt(2): one photon shared by two modes.
inline PureState single_photon_superposition() {
  return make_state(2, {{{0, 1}, 1.0}, {{1, 0}, 1.0}});
}

/// (|20> + |02>)/sqrt(2)
inline PureState two_photon_pair() {
  return make_state(2, {{{2, 0}, 1.0}, {{0, 2}, 1.0}});
}

/// (|11> + |20> + |02>)/sqrt(3)
inline PureState two_photon_uniform() {
  return make_state(2, {{{1, 1}, 1.0}, {{2, 0}, 1.0}, {{0, 2}, 1.0}});
}

/// Two photons in 2N modes, sum_k |e_k + e_{2N-1-k}> / sqrt(N): mode k is
/// paired with its mirror image. N = 2 gives (|0110> + |1001>)/sqrt(2).
inline PureState mirrored_photon_pairs(int n) {
  PureState::AmplitudeMap amps;
  const int modes = 2 * n;
  for (int k = 0; k < n; ++k) {
    std::vector<int> c(static_cast<std::size_t>(modes), 0);
    c[static_cast<std::size_t>(k)] = 1;
    c[static_cast<std::size_t>(modes - 1 - k)] = 1;
    amps[Occupation(c)] = 1.0;
  }
  return normalize(PureState(modes, std::move(amps)));
}

/// (|0220> + |2002> - |1111>)/sqrt(3)
inline PureState four_photon_pairs() {
  return make_state(4, {{{0, 2, 2, 0}, 1.0}, {{2, 0, 0, 2}, 1.0}, {{1, 1, 1, 1}, -1.0}});
}

/// (|00> + |11>)/sqrt(2): mixes the 0- and 2-photon sectors.
inline PureState vacuum_plus_pair() {
  return make_state(2, {{{0, 0}, 1.0}, {{1, 1}, 1.0}});
}

/// (|00> + (|02> + |20>)/sqrt(2))/sqrt(2)
inline PureState vacuum_plus_pair_rotated() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_state(2, {{{0, 0}, 1.0}, {{0, 2}, r}, {{2, 0}, r}});
}

/// a'_0 = (a_0 + a_1)/sqrt(2), a'_1 = (a_0 - a_1)/sqrt(2)
inline ModeUnitary balanced_splitter() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(2, 2);
  u << r, r, r, -r;
  return validate_unitary(u);
}

/// a'_0 = (a_0 + x a_1)/sqrt(2), a'_1 = (a_0 - x a_1)/sqrt(2) with |x| = 1.
inline ModeUnitary phased_splitter(Complex x) {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(2, 2);
  u << r, r * x, r, -r * x;
  return validate_unitary(u);
}

/// Linear to circular basis: x = i.
inline ModeUnitary circular_splitter() { return phased_splitter(Complex{0.0, 1.0}); }

/// x = 1/3 + 2 sqrt(2) i / 3, the phase usually quoted for the log2(3)-ebit
/// rewrite of (|20> + |02>)/sqrt(2). It gives weights 1/18, 8/9, 1/18.
inline Complex nominal_uniform_phase() { return {1.0 / 3.0, 2.0 * std::sqrt(2.0) / 3.0}; }

/// The phase that actually spreads (|20> + |02>)/sqrt(2) evenly over |20>,
/// |11>, |02>: the square root of nominal_uniform_phase().
inline Complex uniform_phase() { return std::sqrt(nominal_uniform_phase()); }

/// Four-mode rotation mixing modes (1,2) and (0,3) with
/// x+- = sqrt(1/2 +- sqrt(2)/4):
///   a'_1 = x+ a_1 - x- a_2,  a'_2 = x- a_1 + x+ a_2,
///   a'_0 = x+ a_0 - x- a_3,  a'_3 = x- a_0 + x+ a_3.
inline ModeUnitary mirrored_pair_rotation() {
  const double xp = std::sqrt(0.5 + std::sqrt(2.0) / 4.0);
  const double xm = std::sqrt(0.5 - std::sqrt(2.0) / 4.0);
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(1, 1) = xp;
  u(1, 2) = -xm;
  u(2, 1) = xm;
  u(2, 2) = xp;
  u(0, 0) = xp;
  u(0, 3) = -xm;
  u(3, 0) = xm;
  u(3, 3) = xp;
  return validate_unitary(u);
}

}  // namespace fockmodes::fixtures
