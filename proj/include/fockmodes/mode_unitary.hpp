#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "pure_state.hpp"

namespace fockmodes {

using ComplexMatrix = Eigen::MatrixXcd;

/// max_ij |(A^dagger A - I)_ij|
inline double unitarity_residual(const ComplexMatrix& a) {
  const auto n = a.cols();
  return (a.adjoint() * a - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

class ModeUnitary;
ModeUnitary validate_unitary(const ComplexMatrix& entries, double tol);

/// An M x M unitary U defining new mode operators from old ones,
///   a'^dagger_r = sum_c U(r, c) a^dagger_c.
/// Instances are only produced through validate_unitary() or operations that
/// preserve unitarity.
class ModeUnitary {
 public:
  static ModeUnitary identity(int dim) {
    if (dim < 1) throw DimensionError("unitary dimension must be positive");
    return ModeUnitary(ComplexMatrix::Identity(dim, dim));
  }

  int dim() const noexcept { return static_cast<int>(u_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  Complex operator()(int row, int col) const { return u_(row, col); }

  ModeUnitary adjoint() const { return ModeUnitary(u_.adjoint()); }

  /// (W * V) applies V's redefinition first, then W's.
  friend ModeUnitary operator*(const ModeUnitary& w, const ModeUnitary& v) {
    if (w.dim() != v.dim()) throw DimensionError("composing unitaries of different size");
    return ModeUnitary(w.u_ * v.u_);
  }

 private:
  explicit ModeUnitary(ComplexMatrix u) : u_(std::move(u)) {}

  friend ModeUnitary validate_unitary(const ComplexMatrix&, double);
  friend ModeUnitary exp_i_hermitian(const ComplexMatrix&);

  ComplexMatrix u_;
};

inline ModeUnitary validate_unitary(const ComplexMatrix& entries, double tol = 1e-10) {
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw DimensionError("unitary must be a non-empty square matrix, got " +
                         std::to_string(entries.rows()) + "x" +
                         std::to_string(entries.cols()));
  }
  const double residual = unitarity_residual(entries);
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: max|U^dagger U - I| = " << residual
        << " exceeds " << tol;
    throw NotUnitaryError(msg.str(), residual);
  }
  return ModeUnitary(entries);
}

/// Real coordinates of an M x M Hermitian matrix: the M diagonal entries,
/// then the real parts of the strict upper triangle (row-major), then the
/// imaginary parts in the same order.
class HermitianParams {
 public:
  HermitianParams(int modes, std::vector<double> theta)
      : modes_(modes), theta_(std::move(theta)) {
    if (modes_ < 1) throw DimensionError("parameter dimension must be positive");
    if (theta_.size() != static_cast<std::size_t>(modes_ * modes_)) {
      throw DimensionError("expected " + std::to_string(modes_ * modes_) +
                           " parameters, got " + std::to_string(theta_.size()));
    }
  }

  static HermitianParams zeros(int modes) {
    return HermitianParams(modes, std::vector<double>(static_cast<std::size_t>(modes * modes), 0.0));
  }

  int modes() const noexcept { return modes_; }
  std::span<const double> theta() const noexcept { return theta_; }
  const std::vector<double>& values() const noexcept { return theta_; }

  ComplexMatrix hermitian() const { return hermitian_from(modes_, theta_); }

  static ComplexMatrix hermitian_from(int m, std::span<const double> theta) {
    ComplexMatrix h = ComplexMatrix::Zero(m, m);
    const std::size_t pairs = static_cast<std::size_t>(m * (m - 1) / 2);
    std::size_t k = 0;
    for (int j = 0; j < m; ++j) h(j, j) = theta[static_cast<std::size_t>(j)];
    for (int r = 0; r < m; ++r) {
      for (int c = r + 1; c < m; ++c, ++k) {
        const Complex z{theta[static_cast<std::size_t>(m) + k],
                        theta[static_cast<std::size_t>(m) + pairs + k]};
        h(r, c) = z;
        h(c, r) = std::conj(z);
      }
    }
    return h;
  }

 private:
  int modes_;
  std::vector<double> theta_;
};

inline ModeUnitary exp_i_hermitian(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const auto& v = eig.eigenvectors();
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    phases(k) = std::polar(1.0, eig.eigenvalues()(k));
  }
  return ModeUnitary(v * phases.asDiagonal() * v.adjoint());
}

/// U = exp(iH) for the Hermitian H encoded by `p`. Every unitary is reached.
inline ModeUnitary exp_map(const HermitianParams& p) {
  return exp_i_hermitian(p.hermitian());
}

inline ModeUnitary exp_map(int modes, std::span<const double> theta) {
  if (theta.size() != static_cast<std::size_t>(modes * modes)) {
    throw DimensionError("expected " + std::to_string(modes * modes) + " parameters");
  }
  return exp_i_hermitian(HermitianParams::hermitian_from(modes, theta));
}

/// Two-mode mixer on modes i < j: identity except for the block
///   [[cos t, e^{i phi} sin t], [-e^{-i phi} sin t, cos t]].
inline ModeUnitary beam_splitter(int modes, int i, int j, double theta, double phi) {
  if (modes < 2 || i < 0 || j <= i || j >= modes) {
    throw IndexError("beam_splitter needs 0 <= i < j < " + std::to_string(modes) +
                     ", got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  ComplexMatrix u = ComplexMatrix::Identity(modes, modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  u(i, i) = c;
  u(j, j) = c;
  u(i, j) = s * std::polar(1.0, phi);
  u(j, i) = -s * std::polar(1.0, -phi);
  return validate_unitary(u, 1e-12);
}

}  // namespace fockmodes
