#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "errors.hpp"
#include "mode_unitary.hpp"
#include "occupation.hpp"
#include "permanent.hpp"
#include "pure_state.hpp"

namespace fockmodes {

/// Precomputed layout for rewriting one fixed state under many different mode
/// unitaries.
///
/// The state is written as a creation polynomial acting on the vacuum,
///   |n> = prod_j (a^dagger_j)^{n_j} / sqrt(n_j!) |0>,
/// every old operator is replaced by its expansion in the new modes,
///   a^dagger_j = sum_k conj(U(k, j)) a'^dagger_k,
/// and the product is multiplied out one linear factor at a time on dense
/// per-degree monomial vectors. A monomial prod_k (a'^dagger_k)^{m_k} maps to
/// sqrt(prod m_k!) |m>. Photon number is conserved, so each input sector is
/// rewritten into the same sector.
class RedefinitionPlan {
 public:
  struct Term {
    std::vector<int> factor_modes;  // mode j repeated n_j times
    Complex coefficient;            // amplitude / sqrt(prod n_j!)
  };

  struct Sector {
    int photons;
    std::vector<Occupation> basis;       // canonical order
    std::vector<double> sqrt_factorial;  // sqrt(prod m_k!) per basis entry
    std::vector<Term> terms;
  };

  explicit RedefinitionPlan(const PureState& s) : modes_(s.mode_count()) {
    std::map<int, std::vector<Term>> by_total;
    int max_photons = 0;
    for (const auto& [occ, amp] : s.amplitudes()) {
      Term t;
      double fact = 1.0;
      for (std::size_t j = 0; j < occ.size(); ++j) {
        fact *= factorial(occ[j]);
        for (int r = 0; r < occ[j]; ++r) t.factor_modes.push_back(static_cast<int>(j));
      }
      t.coefficient = amp / std::sqrt(fact);
      max_photons = std::max(max_photons, occ.total());
      by_total[occ.total()].push_back(std::move(t));
    }
    for (auto& [photons, terms] : by_total) {
      Sector sec{photons, enumerate_sector(modes_, photons), {}, std::move(terms)};
      sec.sqrt_factorial.reserve(sec.basis.size());
      for (const auto& occ : sec.basis) {
        double f = 1.0;
        for (int c : occ.counts()) f *= factorial(c);
        sec.sqrt_factorial.push_back(std::sqrt(f));
      }
      sectors_.push_back(std::move(sec));
    }
    // raise_[d][idx * M + k]: rank in degree d+1 of (monomial idx of degree d) + e_k
    for (int d = 0; d < max_photons; ++d) {
      const auto basis = enumerate_sector(modes_, d);
      const SectorIndex next(modes_, d + 1);
      std::vector<std::size_t> table(basis.size() * static_cast<std::size_t>(modes_));
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        std::vector<int> counts = basis[idx].counts();
        for (int k = 0; k < modes_; ++k) {
          counts[static_cast<std::size_t>(k)] += 1;
          table[idx * static_cast<std::size_t>(modes_) + static_cast<std::size_t>(k)] =
              next.rank(counts);
          counts[static_cast<std::size_t>(k)] -= 1;
        }
      }
      raise_.push_back(std::move(table));
    }
  }

  int mode_count() const noexcept { return modes_; }
  const std::vector<Sector>& sectors() const noexcept { return sectors_; }

  /// Dense amplitudes per sector (same order as sectors()) of the state
  /// expressed in the modes defined by `u`. Not renormalized.
  std::vector<std::vector<Complex>> apply(const ComplexMatrix& u) const {
    if (u.rows() != modes_ || u.cols() != modes_) {
      throw DimensionError("unitary of dimension " + std::to_string(u.rows()) +
                           " applied to a " + std::to_string(modes_) + "-mode state");
    }
    const auto m = static_cast<std::size_t>(modes_);
    // w[j * M + k] = conj(U(k, j)): expansion of old mode j over new modes k
    std::vector<Complex> w(m * m);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        w[j * m + k] = std::conj(u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)));
      }
    }

    std::vector<std::vector<Complex>> out;
    out.reserve(sectors_.size());
    std::vector<Complex> poly, next;
    for (const auto& sec : sectors_) {
      std::vector<Complex> amps(sec.basis.size(), Complex{});
      for (const auto& term : sec.terms) {
        poly.assign(1, term.coefficient);
        std::size_t degree = 0;
        for (int j : term.factor_modes) {
          const auto& raise = raise_[degree];
          next.assign(sector_dimension(modes_, static_cast<int>(degree) + 1), Complex{});
          const Complex* col = &w[static_cast<std::size_t>(j) * m];
          for (std::size_t idx = 0; idx < poly.size(); ++idx) {
            const Complex c = poly[idx];
            if (c == Complex{}) continue;
            const std::size_t* up = &raise[idx * m];
            for (std::size_t k = 0; k < m; ++k) next[up[k]] += c * col[k];
          }
          poly.swap(next);
          ++degree;
        }
        for (std::size_t idx = 0; idx < amps.size(); ++idx) {
          amps[idx] += poly[idx] * sec.sqrt_factorial[idx];
        }
      }
      out.push_back(std::move(amps));
    }
    return out;
  }

  PureState to_state(const std::vector<std::vector<Complex>>& dense) const {
    PureState::AmplitudeMap amps;
    for (std::size_t s = 0; s < sectors_.size(); ++s) {
      for (std::size_t idx = 0; idx < sectors_[s].basis.size(); ++idx) {
        if (std::abs(dense[s][idx]) >= kPruneThreshold) {
          amps.emplace(sectors_[s].basis[idx], dense[s][idx]);
        }
      }
    }
    return PureState(modes_, std::move(amps));
  }

 private:
  int modes_;
  std::vector<Sector> sectors_;
  std::vector<std::vector<std::size_t>> raise_;
};

/// The same physical state written in the modes a'^dagger = U a^dagger.
/// The result is renormalized.
inline PureState apply_redefinition(const PureState& s, const ModeUnitary& u) {
  if (u.dim() != s.mode_count()) {
    throw DimensionError("unitary of dimension " + std::to_string(u.dim()) +
                         " applied to a " + std::to_string(s.mode_count()) +
                         "-mode state");
  }
  const RedefinitionPlan plan(s);
  return normalize(plan.to_state(plan.apply(u.matrix())));
}

}  // namespace fockmodes
