#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "mode_unitary.hpp"
#include "occupation.hpp"

namespace fockmodes {

inline constexpr int kMaxPermanentSize = 16;

/// Permanent via Ryser's inclusion-exclusion formula, visiting column subsets
/// in Gray-code order so each step adds or removes a single column from the
/// running row sums. O(2^n n).
inline Complex permanent(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("permanent of a non-square " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + " matrix");
  }
  const auto n = static_cast<int>(a.rows());
  if (n < 1) throw DimensionError("permanent of an empty matrix");
  if (n > kMaxPermanentSize) {
    throw SizeError("permanent limited to n <= " + std::to_string(kMaxPermanentSize) +
                    ", got " + std::to_string(n));
  }

  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  std::uint32_t gray = 0;
  const std::uint32_t subsets = 1u << n;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint32_t bit = 1u << col;
    gray ^= bit;
    const double sign_col = (gray & bit) ? 1.0 : -1.0;
    Complex prod{1.0, 0.0};
    for (int r = 0; r < n; ++r) {
      row_sums[static_cast<std::size_t>(r)] += sign_col * a(r, col);
      prod *= row_sums[static_cast<std::size_t>(r)];
    }
    // (-1)^{n - |S|}
    const bool odd = ((n - std::popcount(gray)) & 1) != 0;
    total += odd ? -prod : prod;
  }
  return total;
}

inline double factorial(int n) {
  return std::tgamma(static_cast<double>(n) + 1.0);
}

/// <m| Gamma(U) |n>: the amplitude of |m> in apply_redefinition(|n>, U),
/// computed from a permanent instead of a polynomial expansion.
///
/// Each old creation operator is a^dagger_j = sum_k conj(U(k, j)) a'^dagger_k,
/// so the single-particle matrix is W = conj(U) and the element is
/// perm(W[m; n]) / sqrt(prod m_i! prod n_j!), where row k of W is repeated m_k
/// times and column j is repeated n_j times.
inline Complex fock_matrix_element(const ModeUnitary& u, const Occupation& m,
                                   const Occupation& n) {
  const auto dim = static_cast<std::size_t>(u.dim());
  if (m.size() != dim || n.size() != dim) {
    throw DimensionError("occupation length does not match unitary dimension " +
                         std::to_string(dim));
  }
  const int photons = n.total();
  if (m.total() != photons) return Complex{};
  if (photons == 0) return Complex{1.0, 0.0};

  std::vector<int> rows, cols;
  for (std::size_t k = 0; k < dim; ++k) {
    for (int t = 0; t < m[k]; ++t) rows.push_back(static_cast<int>(k));
    for (int t = 0; t < n[k]; ++t) cols.push_back(static_cast<int>(k));
  }
  ComplexMatrix sub(photons, photons);
  for (int r = 0; r < photons; ++r) {
    for (int c = 0; c < photons; ++c) {
      sub(r, c) = std::conj(u(rows[static_cast<std::size_t>(r)],
                              cols[static_cast<std::size_t>(c)]));
    }
  }
  double norm = 1.0;
  for (std::size_t k = 0; k < dim; ++k) norm *= factorial(m[k]) * factorial(n[k]);
  return permanent(sub) / std::sqrt(norm);
}

}  // namespace fockmodes
