#include <gtest/gtest.h>

#include <cmath>

#include "fockmodes/fixtures.hpp"
#include "fockmodes/pure_state.hpp"
#include "fockmodes/random.hpp"

namespace fockmodes {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

TEST(SectorWeights, SingleSector) {
  const auto w = sector_weights(fixtures::single_photon_superposition());
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NEAR(w.at(1), 1.0, 1e-12);
}

TEST(SectorWeights, MixedSectors) {
  const auto w = sector_weights(fixtures::vacuum_plus_pair());
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w.at(0), 0.5, 1e-12);
  EXPECT_NEAR(w.at(2), 0.5, 1e-12);
}

TEST(SectorWeights, BasisKet) {
  const auto w = sector_weights(PureState::basis({1, 1}));
  EXPECT_NEAR(w.at(2), 1.0, 1e-12);
}

TEST(SectorWeights, SumToOneForRandomStates) {
  random::Engine rng(7);
  for (int c = 0; c < 200; ++c) {
    double total = 0;
    for (const auto& [n, w] : sector_weights(random::small_state(rng))) {
      EXPECT_GE(w, 0.0);
      total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(InnerProduct, NormalizedStateHasUnitOverlap) {
  const auto s = fixtures::four_photon_pairs();
  EXPECT_NEAR(std::abs(inner_product(s, s) - 1.0), 0.0, 1e-12);
}

TEST(InnerProduct, OrthogonalBasisKets) {
  EXPECT_EQ(inner_product(PureState::basis({2, 0}), PureState::basis({0, 2})), Complex{});
}

TEST(InnerProduct, Projection) {
  const auto v = inner_product(fixtures::two_photon_pair(), PureState::basis({2, 0}));
  EXPECT_NEAR(v.real(), kInvSqrt2, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(InnerProduct, ConjugateSymmetric) {
  random::Engine rng(11);
  for (int c = 0; c < 50; ++c) {
    const auto a = random::state(rng, 3, {2});
    const auto b = random::state(rng, 3, {2});
    EXPECT_NEAR(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 0.0, 1e-14);
  }
}

TEST(InnerProduct, ModeCountMismatch) {
  EXPECT_THROW(inner_product(PureState::basis({1}), PureState::basis({1, 0})), DimensionError);
}

TEST(Normalize, ScalesByPositiveReal) {
  const auto s = normalize(PureState(2, {{Occupation{1, 0}, Complex{2.0, 0.0}}}));
  EXPECT_EQ(s.amplitude({1, 0}), Complex(1.0, 0.0));
}

TEST(Normalize, EqualWeights) {
  const auto s = normalize(PureState(2, {{Occupation{2, 0}, 1.0}, {Occupation{0, 2}, 1.0}}));
  EXPECT_NEAR(s.amplitude({2, 0}).real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s.amplitude({0, 2}).real(), kInvSqrt2, 1e-15);
}

TEST(Normalize, BelowThresholdIsDegenerate) {
  EXPECT_THROW(normalize(PureState(2, {{Occupation{1, 0}, 1e-20}})), DegenerateStateError);
}

TEST(Normalize, Idempotent) {
  random::Engine rng(3);
  for (int c = 0; c < 100; ++c) {
    const auto once = normalize(random::small_state(rng));
    EXPECT_LE(max_amplitude_difference(normalize(once), once), 1e-14);
  }
}

TEST(PureState, RejectsWrongLengthKeys) {
  EXPECT_THROW(PureState(2, {{Occupation{1, 0, 0}, 1.0}}), DimensionError);
}

TEST(PureState, PrunesTinyAmplitudes) {
  const PureState s(2, {{Occupation{1, 0}, 1.0}, {Occupation{0, 1}, 1e-16}});
  EXPECT_EQ(s.size(), 1u);
}

TEST(PureState, DefiniteTotal) {
  EXPECT_EQ(fixtures::four_photon_pairs().definite_total(), 4);
  EXPECT_FALSE(fixtures::vacuum_plus_pair().definite_total().has_value());
}

TEST(CanonicalPhase, FirstAmplitudeRealPositive) {
  const PureState s(2, {{Occupation{1, 0}, Complex{0.0, -0.6}}, {Occupation{0, 1}, Complex{0.8, 0.0}}});
  const auto c = canonical_phase(s);
  EXPECT_NEAR(c.amplitude({1, 0}).real(), 0.6, 1e-15);
  EXPECT_EQ(c.amplitude({1, 0}).imag(), 0.0);
  EXPECT_NEAR(c.amplitude({0, 1}).imag(), 0.8, 1e-15);
  EXPECT_NEAR(distance_up_to_phase(c, s), 0.0, 1e-15);
}

}  // namespace
}  // namespace fockmodes
