#include <gtest/gtest.h>

#include "torelli/johnson.hpp"
#include "torelli/random.hpp"
#include "torelli/render.hpp"

using namespace torelli;

namespace {

Vector a(const SymplecticSpace& sp, int i) { return Vector::a(sp, i); }
Vector b(const SymplecticSpace& sp, int i) { return Vector::b(sp, i); }

BoundingPairSpec canonical_pair(const SymplecticSpace& sp) {
  return {{a(sp, 1), {{a(sp, 2), b(sp, 2)}}}, {-a(sp, 1), {{a(sp, 3), b(sp, 3)}}}};
}

}  // namespace

TEST(JohnsonElement, Examples) {
  const SymplecticSpace sp(3);
  const auto pair = canonical_pair(sp);
  EXPECT_EQ(johnson_element(pair.side1), wedge(a(sp, 1), a(sp, 2), b(sp, 2)));
  EXPECT_EQ(render(johnson_element(pair.side2)), "-a1^a3^b3");
}

TEST(JohnsonElement, PairsShiftedByBoundaryGiveSameElement) {
  const SymplecticSpace sp(3);
  const SubsurfaceSpec plain{a(sp, 1), {{a(sp, 2), b(sp, 2)}}};
  const SubsurfaceSpec shifted{a(sp, 1), {{a(sp, 2) + Rational(3) * a(sp, 1), b(sp, 2) - Rational(1, 2) * a(sp, 1)}}};
  EXPECT_NO_THROW(shifted.validate());
  EXPECT_EQ(johnson_element(shifted), johnson_element(plain));
}

TEST(JohnsonElement, ContractionIsGenusTimesBoundary) {
  Rng rng(31);
  for (int g = 3; g <= 4; ++g) {
    const SymplecticSpace sp(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto pair = random_bounding_pair(rng, sp);
      for (const auto* side : {&pair.side1, &pair.side2}) {
        const Vector expected = Rational(side->genus()) * side->d;
        EXPECT_EQ(contraction3(johnson_element(*side)), expected);
      }
    }
  }
}

TEST(JohnsonBp, CanonicalValue) {
  const SymplecticSpace sp(3);
  const auto pair = canonical_pair(sp);
  const auto j = johnson_bp(pair);
  EXPECT_EQ(render(j), "1/2*a1^a2^b2 - 1/2*a1^a3^b3");
  EXPECT_TRUE(is_primitive(j));
  EXPECT_EQ(johnson_element(pair.side1) - johnson_element(pair.side2), wedge(Multivector::from_vector(a(sp, 1)), delta(sp)));
}

TEST(JohnsonBp, FixtureMatchesCanonicalPair) {
  const auto fx = paper_figure_fixture();
  EXPECT_EQ(fx.name, "paper-figure-1");
  const auto& sp = fx.pair.space();
  EXPECT_EQ(johnson_bp(fx.pair), johnson_bp(canonical_pair(sp)));
  EXPECT_EQ(render(fx.top), "-a2^a3^b1");
  EXPECT_TRUE(is_primitive(fx.top));
  EXPECT_EQ(fixture("paper-figure-1").top, fx.top);
  EXPECT_THROW(fixture("no-such-fixture"), ValidationError);
}

TEST(JohnsonBp, RandomPairsSatisfyIdentityAndAreSwapInvariant) {
  Rng rng(32);
  for (int g = 3; g <= 4; ++g) {
    const SymplecticSpace sp(g);
    for (int trial = 0; trial < 25; ++trial) {
      const auto pair = random_bounding_pair(rng, sp);
      ASSERT_NO_THROW(pair.validate());
      const auto j = johnson_bp(pair);
      EXPECT_TRUE(is_primitive(j));
      EXPECT_EQ(johnson_element(pair.side1) - johnson_element(pair.side2),
                wedge(Multivector::from_vector(pair.side1.d), delta(sp)));
      EXPECT_EQ(project_primitive(johnson_element(pair.side1)), project_primitive(johnson_element(pair.side2)));
      EXPECT_EQ(johnson_bp(pair.swapped()), j);
    }
  }
}

TEST(JohnsonBp, EquivariantUnderSymplecticMaps) {
  Rng rng(33);
  const SymplecticSpace sp(4);
  for (int trial = 0; trial < 15; ++trial) {
    const auto pair = random_bounding_pair(rng, sp);
    const auto map = random_symplectic_map(rng, sp);
    EXPECT_EQ(johnson_bp(transform(map, pair)), map.apply(johnson_bp(pair)));
  }
}

TEST(JohnsonBp, ActsTriviallyOnHomology) {
  Rng rng(34);
  for (int g = 3; g <= 4; ++g) {
    const SymplecticSpace sp(g);
    EXPECT_TRUE(bounding_pair_action_on_V(canonical_pair(SymplecticSpace(3))).is_identity());
    for (int trial = 0; trial < 20; ++trial) {
      const auto pair = random_bounding_pair(rng, sp);
      EXPECT_TRUE(bounding_pair_action_on_V(pair).is_identity());
    }
  }
  const SymplecticSpace sp(3);
  EXPECT_FALSE(Transvection(b(sp, 1)).matrix().is_identity());
}

TEST(Validation, SubsurfaceErrors) {
  const SymplecticSpace sp(3);
  EXPECT_THROW((SubsurfaceSpec{Vector(sp), {{a(sp, 2), b(sp, 2)}}}.validate()), ValidationError);
  // e . f != 1
  EXPECT_THROW((SubsurfaceSpec{a(sp, 1), {{a(sp, 2), a(sp, 3)}}}.validate()), ValidationError);
  // d not in the radical
  EXPECT_THROW((SubsurfaceSpec{a(sp, 1), {{b(sp, 1), a(sp, 1) + a(sp, 2)}}}.validate()), ValidationError);
  // two pairs not orthogonal
  const SymplecticSpace sp4(4);
  EXPECT_THROW((SubsurfaceSpec{a(sp4, 1), {{a(sp4, 2), b(sp4, 2)}, {a(sp4, 3), b(sp4, 3) + a(sp4, 2)}}}.validate()),
               ValidationError);
}

TEST(Validation, BoundingPairErrors) {
  const SymplecticSpace sp(3);
  auto pair = canonical_pair(sp);
  pair.side2.d = a(sp, 1);
  EXPECT_THROW(pair.validate(), ValidationError);
  EXPECT_THROW(johnson_bp(pair), ValidationError);

  const SymplecticSpace sp4(4);
  const BoundingPairSpec short_genus{{a(sp4, 1), {{a(sp4, 2), b(sp4, 2)}}}, {-a(sp4, 1), {{a(sp4, 3), b(sp4, 3)}}}};
  EXPECT_THROW(short_genus.validate(), ValidationError);

  // each side valid and the genus adds up, but the sides overlap
  const BoundingPairSpec overlap{{a(sp4, 1), {{a(sp4, 2), b(sp4, 2)}}},
                                 {-a(sp4, 1), {{a(sp4, 2), b(sp4, 2)}, {a(sp4, 3), b(sp4, 3)}}}};
  EXPECT_NO_THROW(overlap.validate());
  EXPECT_THROW(johnson_bp(overlap), ValidationError);
}

TEST(JohnsonElement, GenusZeroSideIsDegenerate) {
  const SymplecticSpace sp(3);
  const SubsurfaceSpec empty{a(sp, 1), {}};
  EXPECT_NO_THROW(empty.validate());
  EXPECT_TRUE(johnson_element(empty).is_zero());
  const BoundingPairSpec pair{empty, {-a(sp, 1), {{a(sp, 2), b(sp, 2)}, {a(sp, 3), b(sp, 3)}}}};
  EXPECT_TRUE(johnson_bp(pair).is_zero());
}

TEST(StandardPair, AllSplits) {
  for (int g = 3; g <= 5; ++g) {
    const SymplecticSpace sp(g);
    for (int h = 1; h <= g - 2; ++h) {
      const auto pair = standard_bounding_pair(sp, h);
      EXPECT_NO_THROW(pair.validate());
      EXPECT_EQ(pair.side1.genus(), h);
      EXPECT_EQ(pair.side2.genus(), g - 1 - h);
      EXPECT_FALSE(johnson_bp(pair).is_zero());
    }
  }
}
