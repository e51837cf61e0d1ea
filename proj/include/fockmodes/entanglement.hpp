#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mode_unitary.hpp"
#include "occupation.hpp"
#include "pure_state.hpp"

namespace fockmodes {

inline constexpr double kRankThreshold = 1e-10;
inline constexpr double kClipTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;

/// Two-way split of the mode indices {0, ..., M-1}. Both sides are stored
/// sorted.
class Partition {
 public:
  Partition(std::vector<int> side_a, std::vector<int> side_b)
      : a_(std::move(side_a)), b_(std::move(side_b)) {
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    if (a_.empty() || b_.empty()) throw PartitionError("both sides of a partition must be non-empty");
    std::vector<int> all(a_);
    all.insert(all.end(), b_.begin(), b_.end());
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i] != static_cast<int>(i)) {
        throw PartitionError("partition sides must be disjoint and cover modes 0.." +
                             std::to_string(all.size() - 1));
      }
    }
  }

  /// First `count` modes against the rest.
  static Partition split_at(int modes, int count) {
    std::vector<int> a, b;
    for (int i = 0; i < modes; ++i) (i < count ? a : b).push_back(i);
    return Partition(std::move(a), std::move(b));
  }

  const std::vector<int>& side_a() const noexcept { return a_; }
  const std::vector<int>& side_b() const noexcept { return b_; }
  int mode_count() const noexcept { return static_cast<int>(a_.size() + b_.size()); }
  Partition swapped() const { return Partition(b_, a_); }

  void check_modes(int modes) const {
    if (modes != mode_count()) {
      throw PartitionError("partition covers " + std::to_string(mode_count()) +
                           " modes but the state has " + std::to_string(modes));
    }
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    s += '|';
    for (std::size_t i = 0; i < b_.size(); ++i) s += (i ? "," : "") + std::to_string(b_[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> a_;
  std::vector<int> b_;
};

struct CoefficientMatrix {
  ComplexMatrix matrix;
  std::vector<Occupation> rows;  // side-A restrictions in the support
  std::vector<Occupation> cols;  // side-B restrictions in the support
};

/// Amplitudes laid out as a (side A) x (side B) matrix.
inline CoefficientMatrix coefficient_matrix(const PureState& s, const Partition& p) {
  p.check_modes(s.mode_count());
  std::map<Occupation, Eigen::Index> rows, cols;
  for (const auto& [occ, amp] : s.amplitudes()) {
    rows.emplace(occ.restrict_to(p.side_a()), 0);
    cols.emplace(occ.restrict_to(p.side_b()), 0);
  }
  CoefficientMatrix out;
  for (auto& [occ, idx] : rows) {
    idx = static_cast<Eigen::Index>(out.rows.size());
    out.rows.push_back(occ);
  }
  for (auto& [occ, idx] : cols) {
    idx = static_cast<Eigen::Index>(out.cols.size());
    out.cols.push_back(occ);
  }
  out.matrix = ComplexMatrix::Zero(static_cast<Eigen::Index>(out.rows.size()),
                                   static_cast<Eigen::Index>(out.cols.size()));
  for (const auto& [occ, amp] : s.amplitudes()) {
    out.matrix(rows.at(occ.restrict_to(p.side_a())), cols.at(occ.restrict_to(p.side_b()))) = amp;
  }
  return out;
}

struct SchmidtSpectrum {
  std::vector<double> lambdas;  // descending
  double entropy_bits = 0.0;
  int numerical_rank = 0;
};

/// -sum lambda log2 lambda, with 0 log 0 = 0.
inline double entropy_bits(const std::vector<double>& lambdas) {
  double h = 0.0;
  for (double l : lambdas) {
    if (l > 0.0) h -= l * std::log2(l);
  }
  return h;
}

/// Builds a spectrum from raw weights: clips rounding-level negatives, checks
/// the trace, sorts descending.
inline SchmidtSpectrum make_spectrum(std::vector<double> lambdas) {
  double trace = 0.0;
  for (double& l : lambdas) {
    if (l < -kClipTolerance) {
      throw NumericalError("Schmidt weight " + std::to_string(l) + " is negative beyond rounding");
    }
    l = std::max(l, 0.0);
    trace += l;
  }
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw NumericalError("Schmidt weights sum to " + std::to_string(trace) +
                         "; is the state normalized?");
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  SchmidtSpectrum out;
  out.entropy_bits = entropy_bits(lambdas);
  out.numerical_rank = static_cast<int>(
      std::count_if(lambdas.begin(), lambdas.end(), [](double l) { return l > kRankThreshold; }));
  out.lambdas = std::move(lambdas);
  return out;
}

/// Squared singular values of an arbitrary coefficient matrix.
inline SchmidtSpectrum spectrum_of(const ComplexMatrix& c) {
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const auto& sv = svd.singularValues();
  std::vector<double> lambdas(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index k = 0; k < sv.size(); ++k) lambdas[static_cast<std::size_t>(k)] = sv(k) * sv(k);
  return make_spectrum(std::move(lambdas));
}

inline SchmidtSpectrum schmidt_spectrum(const PureState& s, const Partition& p) {
  return spectrum_of(coefficient_matrix(s, p).matrix);
}

enum class Side { A, B };

struct ReducedDensityMatrix {
  ComplexMatrix rho;
  std::vector<Occupation> index;
};

inline ReducedDensityMatrix reduced_density_matrix(const PureState& s, const Partition& p, Side side) {
  auto cm = coefficient_matrix(s, p);
  if (side == Side::A) {
    return {cm.matrix * cm.matrix.adjoint(), std::move(cm.rows)};
  }
  return {cm.matrix.transpose() * cm.matrix.conjugate(), std::move(cm.cols)};
}

/// Upper bound on the Schmidt rank reachable by any mode redefinition.
///
/// With a definite total N, a redefinition keeps the state inside the
/// N-photon sector, and the coefficient matrix splits into blocks with n
/// photons on side A and N - n on side B; each block's rank is capped by the
/// smaller of the two sector dimensions. Without a definite total this falls
/// back to the support shape.
inline int rank_bound(const PureState& s, const Partition& p) {
  p.check_modes(s.mode_count());
  const auto total = s.definite_total();
  if (!total) {
    const auto cm = coefficient_matrix(s, p);
    return static_cast<int>(std::min(cm.rows.size(), cm.cols.size()));
  }
  const int na = static_cast<int>(p.side_a().size());
  const int nb = static_cast<int>(p.side_b().size());
  std::size_t bound = 0;
  for (int n = 0; n <= *total; ++n) {
    bound += std::min(sector_dimension(na, n), sector_dimension(nb, *total - n));
  }
  return static_cast<int>(bound);
}

/// U_A (+) U_B: acts with `ua` among side-A modes and `ub` among side-B
/// modes, in the sorted order of each side.
inline ModeUnitary local_unitary(const Partition& p, const ModeUnitary& ua, const ModeUnitary& ub) {
  if (ua.dim() != static_cast<int>(p.side_a().size()) ||
      ub.dim() != static_cast<int>(p.side_b().size())) {
    throw DimensionError("local unitary blocks do not match partition sides");
  }
  const int m = p.mode_count();
  ComplexMatrix u = ComplexMatrix::Zero(m, m);
  const auto& a = p.side_a();
  const auto& b = p.side_b();
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      u(a[r], a[c]) = ua(static_cast<int>(r), static_cast<int>(c));
  for (std::size_t r = 0; r < b.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c)
      u(b[r], b[c]) = ub(static_cast<int>(r), static_cast<int>(c));
  return validate_unitary(u, 1e-10);
}

}  // namespace fockmodes
