#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "errors.hpp"
#include "occupation.hpp"

namespace fockmodes {

using Complex = std::complex<double>;

/// Amplitudes with modulus below this are dropped on construction.
inline constexpr double kPruneThreshold = 1e-15;
inline constexpr double kNormTolerance = 1e-12;

/// A pure multi-mode Fock-space state stored sparsely as
/// occupation -> amplitude. Keys iterate in canonical occupation order.
///
/// Construction validates key lengths and prunes tiny amplitudes but does not
/// normalize; use normalize() for that.
class PureState {
 public:
  using AmplitudeMap = std::map<Occupation, Complex>;

  PureState(int mode_count, AmplitudeMap amplitudes)
      : mode_count_(mode_count), amplitudes_(std::move(amplitudes)) {
    if (mode_count_ < 1) throw DimensionError("a state needs at least one mode");
    for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
      if (it->first.size() != static_cast<std::size_t>(mode_count_)) {
        throw DimensionError("occupation " + it->first.to_string() +
                             " does not have " + std::to_string(mode_count_) +
                             " modes");
      }
      if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag())) {
        throw NumericalError("non-finite amplitude for " + it->first.to_string());
      }
      it = std::abs(it->second) < kPruneThreshold ? amplitudes_.erase(it)
                                                   : std::next(it);
    }
  }

  static PureState basis(const Occupation& occ) {
    return PureState(static_cast<int>(occ.size()), {{occ, Complex{1.0, 0.0}}});
  }

  int mode_count() const noexcept { return mode_count_; }
  const AmplitudeMap& amplitudes() const noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  bool empty() const noexcept { return amplitudes_.empty(); }

  Complex amplitude(const Occupation& occ) const {
    auto it = amplitudes_.find(occ);
    return it == amplitudes_.end() ? Complex{} : it->second;
  }

  double norm() const {
    double sum = 0.0;
    for (const auto& [occ, a] : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
  }

  /// Total photon number if every stored occupation shares it.
  std::optional<int> definite_total() const {
    std::optional<int> total;
    for (const auto& [occ, a] : amplitudes_) {
      const int t = occ.total();
      if (total && *total != t) return std::nullopt;
      total = t;
    }
    return total;
  }

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  int mode_count_;
  AmplitudeMap amplitudes_;
};

inline PureState normalize(const PureState& s) {
  const double n = s.norm();
  if (s.empty() || n <= kPruneThreshold) {
    throw DegenerateStateError("cannot normalize the zero state");
  }
  PureState::AmplitudeMap out;
  for (const auto& [occ, a] : s.amplitudes()) out.emplace(occ, a / n);
  return PureState(s.mode_count(), std::move(out));
}

/// <a|b>, antilinear in the first argument.
inline Complex inner_product(const PureState& a, const PureState& b) {
  if (a.mode_count() != b.mode_count()) {
    throw DimensionError("inner product of states with " +
                         std::to_string(a.mode_count()) + " and " +
                         std::to_string(b.mode_count()) + " modes");
  }
  Complex sum{};
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [occ, amp] : small.amplitudes()) {
    auto it = large.amplitudes().find(occ);
    if (it == large.amplitudes().end()) continue;
    const Complex& amp_a = (&small == &a) ? amp : it->second;
    const Complex& amp_b = (&small == &a) ? it->second : amp;
    sum += std::conj(amp_a) * amp_b;
  }
  return sum;
}

/// Probability carried by each total-photon-number sector.
inline std::map<int, double> sector_weights(const PureState& s) {
  std::map<int, double> out;
  for (const auto& [occ, a] : s.amplitudes()) out[occ.total()] += std::norm(a);
  return out;
}

/// Same state with the global phase fixed so the first amplitude in
/// canonical order is real and positive. Used for reporting only.
inline PureState canonical_phase(const PureState& s) {
  if (s.empty()) return s;
  const Complex first = s.amplitudes().begin()->second;
  const Complex phase = std::conj(first) / std::abs(first);
  PureState::AmplitudeMap out;
  for (const auto& [occ, a] : s.amplitudes()) out.emplace(occ, a * phase);
  auto it = out.begin();
  it->second = Complex{it->second.real(), 0.0};
  return PureState(s.mode_count(), std::move(out));
}

/// Largest per-amplitude difference after removing the relative global phase.
inline double distance_up_to_phase(const PureState& a, const PureState& b) {
  const Complex overlap = inner_product(a, b);
  const Complex phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double worst = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) {
    worst = std::max(worst, std::abs(amp * phase - b.amplitude(occ)));
  }
  for (const auto& [occ, amp] : b.amplitudes()) {
    if (a.amplitudes().count(occ) == 0) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

/// Largest per-amplitude difference, phases included.
inline double max_amplitude_difference(const PureState& a, const PureState& b) {
  if (a.mode_count() != b.mode_count()) {
    throw DimensionError("comparing states with different mode counts");
  }
  double worst = 0.0;
  for (const auto& [occ, amp] : a.amplitudes()) {
    worst = std::max(worst, std::abs(amp - b.amplitude(occ)));
  }
  for (const auto& [occ, amp] : b.amplitudes()) {
    if (a.amplitudes().count(occ) == 0) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

}  // namespace fockmodes
