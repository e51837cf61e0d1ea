#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "fockmodes/entanglement.hpp"
#include "fockmodes/fixtures.hpp"
#include "fockmodes/random.hpp"
#include "fockmodes/redefinition.hpp"

namespace fockmodes {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Partition kOneOne({0}, {1});

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({0, 1}, {1, 2}), PartitionError);
  EXPECT_THROW(Partition({0}, {2}), PartitionError);
  EXPECT_THROW(Partition({}, {0, 1}), PartitionError);
  const Partition p({2, 0}, {1});
  EXPECT_EQ(p.side_a(), (std::vector<int>{0, 2}));
  EXPECT_EQ(p.to_string(), "0,2|1");
}

TEST(CoefficientMatrix, SinglePhoton) {
  const auto cm = coefficient_matrix(fixtures::single_photon_superposition(), kOneOne);
  ASSERT_EQ(cm.matrix.rows(), 2);
  ASSERT_EQ(cm.matrix.cols(), 2);
  // rows (1), (0); cols (1), (0) in canonical order
  EXPECT_EQ(cm.rows[0], Occupation({1}));
  EXPECT_NEAR(std::abs(cm.matrix(0, 0)), 0.0, 1e-15);
  EXPECT_NEAR(cm.matrix(0, 1).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(cm.matrix(1, 0).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(std::abs(cm.matrix(1, 1)), 0.0, 1e-15);
}

TEST(CoefficientMatrix, ProductState) {
  const auto cm = coefficient_matrix(PureState::basis({1, 1}), kOneOne);
  ASSERT_EQ(cm.matrix.size(), 1);
  EXPECT_EQ(cm.matrix(0, 0), Complex(1.0, 0.0));
}

TEST(CoefficientMatrix, MirroredPairsAcrossPairs) {
  const auto cm = coefficient_matrix(fixtures::mirrored_photon_pairs(2), Partition::split_at(4, 2));
  ASSERT_EQ(cm.rows, (std::vector<Occupation>{{1, 0}, {0, 1}}));
  ASSERT_EQ(cm.cols, (std::vector<Occupation>{{1, 0}, {0, 1}}));
  // |01>|10> and |10>|01>: anti-diagonal
  EXPECT_NEAR(cm.matrix(0, 1).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(cm.matrix(1, 0).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(cm.matrix.norm(), 1.0, 1e-12);
}

TEST(CoefficientMatrix, PartitionMismatch) {
  EXPECT_THROW(coefficient_matrix(fixtures::two_photon_pair(), Partition::split_at(3, 1)), PartitionError);
}

TEST(SchmidtSpectrum, OneEbit) {
  const auto s = schmidt_spectrum(fixtures::single_photon_superposition(), kOneOne);
  ASSERT_EQ(s.lambdas.size(), 2u);
  EXPECT_NEAR(s.lambdas[0], 0.5, 1e-12);
  EXPECT_NEAR(s.entropy_bits, 1.0, 1e-12);
  EXPECT_EQ(s.numerical_rank, 2);
}

TEST(SchmidtSpectrum, ProductState) {
  const auto s = schmidt_spectrum(PureState::basis({1, 1}), kOneOne);
  EXPECT_EQ(s.lambdas, std::vector<double>{1.0});
  EXPECT_EQ(s.entropy_bits, 0.0);
}

TEST(SchmidtSpectrum, UniformThreeTerms) {
  const auto s = schmidt_spectrum(fixtures::two_photon_uniform(), kOneOne);
  for (double l : s.lambdas) EXPECT_NEAR(l, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(s.entropy_bits, std::log2(3.0), 1e-12);
  EXPECT_NEAR(s.entropy_bits, 1.584963, 1e-6);
}

TEST(SchmidtSpectrum, RotatedVacuumPlusPair) {
  const auto s = schmidt_spectrum(fixtures::vacuum_plus_pair_rotated(), kOneOne);
  ASSERT_EQ(s.lambdas.size(), 2u);
  EXPECT_NEAR(s.lambdas[0], 0.5 + std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_NEAR(s.lambdas[1], 0.5 - std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_NEAR(s.entropy_bits, 0.354579, 1e-6);
}

TEST(SchmidtSpectrum, UnnormalizedStateIsRejected) {
  const PureState raw(2, {{Occupation{1, 0}, 2.0}});
  EXPECT_THROW(schmidt_spectrum(raw, kOneOne), NumericalError);
}

TEST(MakeSpectrum, ClipsRoundingNegativesOnly) {
  const auto s = make_spectrum({1.0, -5e-13});
  EXPECT_EQ(s.lambdas.back(), 0.0);
  EXPECT_THROW(make_spectrum({1.0 + 1e-6, -1e-6}), NumericalError);
}

TEST(ReducedDensityMatrix, SinglePhoton) {
  const auto r = reduced_density_matrix(fixtures::single_photon_superposition(), kOneOne, Side::A);
  EXPECT_NEAR(r.rho(0, 0).real(), 0.5, 1e-12);
  EXPECT_NEAR(r.rho(1, 1).real(), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(r.rho(0, 1)), 0.0, 1e-12);
}

TEST(ReducedDensityMatrix, ProductState) {
  const auto r = reduced_density_matrix(PureState::basis({1, 1}), kOneOne, Side::B);
  ASSERT_EQ(r.rho.size(), 1);
  EXPECT_NEAR(r.rho(0, 0).real(), 1.0, 1e-15);
}

TEST(ReducedDensityMatrix, ThreeQuarterOneQuarterSingleMode) {
  // A state whose first mode holds 0 or 2 photons with weights 3/4 and 1/4.
  const PureState s = normalize(PureState(2, {{Occupation{0, 2}, std::sqrt(0.75)}, {Occupation{2, 0}, 0.5}}));
  const auto r = reduced_density_matrix(s, kOneOne, Side::A);
  ASSERT_EQ(r.index, (std::vector<Occupation>{{2}, {0}}));
  EXPECT_NEAR(r.rho(0, 0).real(), 0.25, 1e-12);
  EXPECT_NEAR(r.rho(1, 1).real(), 0.75, 1e-12);
}

TEST(ReducedDensityMatrix, EigenvaluesMatchSpectrum) {
  random::Engine rng(31);
  for (int c = 0; c < 100; ++c) {
    const auto s = random::small_state(rng);
    const auto p = Partition::split_at(s.mode_count(), 1 + c % (s.mode_count() - 1));
    const auto spec = schmidt_spectrum(s, p);
    for (Side side : {Side::A, Side::B}) {
      const auto r = reduced_density_matrix(s, p, side);
      EXPECT_NEAR(r.rho.trace().real(), 1.0, 1e-10);
      EXPECT_LE((r.rho - r.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(r.rho);
      std::vector<double> ev(eig.eigenvalues().data(), eig.eigenvalues().data() + eig.eigenvalues().size());
      std::sort(ev.begin(), ev.end(), std::greater<>());
      for (std::size_t k = 0; k < std::min(ev.size(), spec.lambdas.size()); ++k) {
        EXPECT_NEAR(ev[k], spec.lambdas[k], 1e-10);
      }
    }
  }
}

TEST(SchmidtSpectrum, SideSymmetryAndEntropyCap) {
  random::Engine rng(32);
  for (int c = 0; c < 200; ++c) {
    const auto s = random::small_state(rng);
    const auto p = Partition::split_at(s.mode_count(), 1);
    const auto ab = schmidt_spectrum(s, p);
    const auto ba = schmidt_spectrum(s, p.swapped());
    EXPECT_NEAR(ab.entropy_bits, ba.entropy_bits, 1e-12);
    for (std::size_t k = 0; k < std::min(ab.lambdas.size(), ba.lambdas.size()); ++k) {
      EXPECT_NEAR(ab.lambdas[k], ba.lambdas[k], 1e-12);
    }
    EXPECT_LE(ab.entropy_bits, std::log2(std::max(ab.numerical_rank, 1)) + 1e-10);
  }
}

TEST(SchmidtSpectrum, InvariantUnderLocalUnitaries) {
  random::Engine rng(33);
  for (int c = 0; c < 200; ++c) {
    const auto s = random::small_state(rng);
    const int m = s.mode_count();
    const int k = 1 + c % (m - 1);
    const auto p = Partition::split_at(m, k);
    const auto u = local_unitary(p, random::unitary(rng, k), random::unitary(rng, m - k));
    EXPECT_NEAR(schmidt_spectrum(apply_redefinition(s, u), p).entropy_bits, schmidt_spectrum(s, p).entropy_bits,
                1e-10);
  }
}

TEST(RankBound, TwoPhotonsSingleModes) { EXPECT_EQ(rank_bound(fixtures::two_photon_pair(), kOneOne), 3); }

TEST(RankBound, TwoPhotonsNByN) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(rank_bound(fixtures::mirrored_photon_pairs(n), Partition::split_at(2 * n, n)), n + 2);
  }
}

TEST(RankBound, FourPhotonsPairs) {
  EXPECT_EQ(rank_bound(fixtures::four_photon_pairs(), Partition::split_at(4, 2)), 9);
}

TEST(RankBound, MixedTotalsFallBackToSupport) {
  EXPECT_EQ(rank_bound(fixtures::vacuum_plus_pair(), kOneOne), 2);
}

TEST(RankBound, CapsRankUnderRandomRedefinitions) {
  random::Engine rng(34);
  for (int c = 0; c < 200; ++c) {
    const int m = 2 + c % 3;
    const auto s = random::state(rng, m, {1 + c % 3});
    const auto p = Partition::split_at(m, 1 + c % (m - 1));
    const auto out = apply_redefinition(s, random::unitary(rng, m));
    EXPECT_LE(schmidt_spectrum(out, p).numerical_rank, rank_bound(s, p));
  }
}

}  // namespace
}  // namespace fockmodes
