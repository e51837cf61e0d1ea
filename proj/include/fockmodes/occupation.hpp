#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace fockmodes {

/// Photon counts per mode, i.e. the label of a Fock basis ket |n_1 ... n_M>.
///
/// Occupations are totally ordered lexicographically with the first mode most
/// significant and larger counts first, so the two-mode, two-photon sector
/// enumerates as (2,0), (1,1), (0,2). Every basis layout in the library uses
/// this order.
class Occupation {
 public:
  Occupation() = default;

  explicit Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
      if (c < 0) throw DimensionError("occupation counts must be non-negative");
    }
  }

  Occupation(std::initializer_list<int> counts)
      : Occupation(std::vector<int>(counts)) {}

  std::size_t size() const noexcept { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  int total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
  }

  /// Counts restricted to the given modes, in the order listed.
  Occupation restrict_to(std::span<const int> modes) const {
    std::vector<int> out;
    out.reserve(modes.size());
    for (int m : modes) out.push_back(counts_.at(static_cast<std::size_t>(m)));
    return Occupation(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(counts_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Occupation&, const Occupation&) = default;

  friend std::strong_ordering operator<=>(const Occupation& a,
                                          const Occupation& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.counts_[i] != b.counts_[i]) {
        // descending: the larger count sorts first
        return b.counts_[i] <=> a.counts_[i];
      }
    }
    return a.size() <=> b.size();
  }

 private:
  std::vector<int> counts_;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of ways to place `photons` bosons into `modes` modes.
inline std::size_t sector_dimension(int modes, int photons) {
  if (modes <= 0 || photons < 0) return modes == 0 && photons == 0 ? 1 : 0;
  return static_cast<std::size_t>(
      binomial(static_cast<std::uint64_t>(photons + modes - 1),
               static_cast<std::uint64_t>(modes - 1)));
}

/// All occupations of `modes` modes holding `photons` photons in total,
/// in canonical order.
inline std::vector<Occupation> enumerate_sector(int modes, int photons) {
  if (modes < 1 || photons < 0) {
    throw DimensionError("enumerate_sector needs modes >= 1 and photons >= 0");
  }
  std::vector<Occupation> out;
  out.reserve(sector_dimension(modes, photons));
  std::vector<int> counts(static_cast<std::size_t>(modes), 0);
  counts[0] = photons;
  const std::size_t last = counts.size() - 1;
  while (true) {
    out.emplace_back(counts);
    // Rightmost non-final mode holding a photon gives one up; everything to
    // its right collapses onto the next mode.
    std::size_t i = last;
    while (i > 0 && counts[i - 1] == 0) --i;
    if (i == 0) break;
    --i;
    int tail = 0;
    for (std::size_t k = i + 1; k <= last; ++k) {
      tail += counts[k];
      counts[k] = 0;
    }
    counts[i] -= 1;
    counts[i + 1] = tail + 1;
  }
  return out;
}

/// Maps the occupations of one sector to their position in canonical order.
class SectorIndex {
 public:
  SectorIndex(int modes, int photons) : modes_(modes), photons_(photons) {
    if (modes < 1 || photons < 0) {
      throw DimensionError("SectorIndex needs modes >= 1 and photons >= 0");
    }
    // table_[m][r] = number of occupations of m modes with r photons
    table_.assign(static_cast<std::size_t>(modes_ + 1),
                  std::vector<std::size_t>(static_cast<std::size_t>(photons_ + 1)));
    for (int m = 0; m <= modes_; ++m) {
      for (int r = 0; r <= photons_; ++r) {
        table_[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)] =
            sector_dimension(m, r);
      }
    }
  }

  int modes() const noexcept { return modes_; }
  int photons() const noexcept { return photons_; }
  std::size_t size() const { return sector_dimension(modes_, photons_); }

  std::size_t rank(std::span<const int> counts) const {
    std::size_t r = 0;
    int remaining = photons_;
    for (int i = 0; i + 1 < modes_; ++i) {
      const int c = counts[static_cast<std::size_t>(i)];
      const auto rest = static_cast<std::size_t>(modes_ - i - 1);
      for (int larger = c + 1; larger <= remaining; ++larger) {
        r += table_[rest][static_cast<std::size_t>(remaining - larger)];
      }
      remaining -= c;
    }
    return r;
  }

  std::size_t rank(const Occupation& occ) const { return rank(occ.counts()); }

 private:
  int modes_;
  int photons_;
  std::vector<std::vector<std::size_t>> table_;
};

}  // namespace fockmodes
