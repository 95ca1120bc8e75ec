#include "hypercol/q3.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "test_support.h"

namespace hypercol {
namespace {

// Direction 0 Red, directions 1 and 2 Blue.
constexpr Q3Colouring kSplit = 0xFF0;
constexpr Q3Colouring kAllRed = 0x000;
constexpr Q3Colouring kAllBlue = 0xFFF;

// Bad-colouring count over all 4096, frozen from tests/oracles/q3_oracle.py and
// re-derived below by NaiveIsGood.
constexpr int kBadColourings = 138;
// Colourings in which some antipodal pair has all six geodesics at two changes.
constexpr int kTwoChangePairHypothesisColourings = 8;

// Explicit vertex walks over the colouring viewed as a Q_3 EdgeColouring.
std::vector<std::vector<Vertex>> NaiveWalks(Vertex from) {
  std::vector<std::vector<Vertex>> walks;
  std::vector<int> order = {0, 1, 2};
  do {
    std::vector<Vertex> w = {from};
    for (int d : order) w.push_back(w.back() ^ (1u << d));
    walks.push_back(w);
  } while (std::next_permutation(order.begin(), order.end()));
  return walks;
}

int NaiveChanges(const EdgeColouring& c, const std::vector<Vertex>& walk) {
  int changes = 0;
  for (std::size_t i = 2; i < walk.size(); ++i) {
    changes += c.edge_colour(walk[i - 2], walk[i - 1]) != c.edge_colour(walk[i - 1], walk[i]);
  }
  return changes;
}

bool NaiveIsGood(Q3Colouring q) {
  const EdgeColouring c = FromQ3(q);
  std::vector<std::vector<int>> per_pair;
  for (Vertex x = 0; x < 4; ++x) {
    std::vector<int> changes;
    for (const auto& w : NaiveWalks(x)) changes.push_back(NaiveChanges(c, w));
    per_pair.push_back(changes);
  }
  for (int a : per_pair[0]) {
    for (int b : per_pair[1]) {
      for (int cc : per_pair[2]) {
        for (int d : per_pair[3]) {
          if (a + b + cc + d <= 2) return true;
        }
      }
    }
  }
  return false;
}

std::vector<std::array<Direction, 3>> AllPermutations() {
  std::vector<std::array<Direction, 3>> out;
  std::array<Direction, 3> p = {0, 1, 2};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TEST(Q3Test, ConversionsRoundTrip) {
  for (int value = 0; value < kQ3Colourings; value += 37) {
    const auto q = static_cast<Q3Colouring>(value);
    EXPECT_EQ(ToQ3(FromQ3(q)), q);
  }
  EXPECT_THROW(ToQ3(EdgeColouring::Uniform(4, Colour::kRed)), std::invalid_argument);
}

TEST(Q3Test, EdgeColourMatchesEdgeColouring) {
  const EdgeColouring c = RandomColouring(3, 17);
  const Q3Colouring q = ToQ3(c);
  for (Vertex u = 0; u < 8; ++u) {
    for (Direction d = 0; d < 3; ++d) EXPECT_EQ(Q3EdgeColour(q, u, d), c.colour(u, d));
  }
}

TEST(Q3Test, RestrictMatchesGlobalEdges) {
  const EdgeColouring c = RandomColouring(8, 4);
  const Subcube s = SubcubeOfPair(0b10010010, 0b00011011);
  const Q3Colouring q = Restrict(c, s);
  for (Vertex x = 0; x < 8; ++x) {
    for (Direction d = 0; d < 3; ++d) {
      EXPECT_EQ(Q3EdgeColour(q, x, d), c.colour(s.to_global(x), s.dirs[d]));
    }
  }
}

TEST(ClassifyTest, MonochromaticIsGoodWithZeroChanges) {
  for (Q3Colouring q : {kAllRed, kAllBlue}) {
    const Classification cls = Classify(q);
    EXPECT_TRUE(cls.good());
    EXPECT_EQ(cls.total_changes, 0);
    for (Vertex x = 0; x < 4; ++x) {
      EXPECT_EQ(cls.witness[x].start, x);
      EXPECT_EQ(cls.witness[x].end(), 7 - x);
    }
  }
}

TEST(ClassifyTest, DirectionSplitsAreBad) {
  for (Direction lone = 0; lone < 3; ++lone) {
    for (Colour lone_colour : {Colour::kRed, Colour::kBlue}) {
      const EdgeColouring c = EdgeColouring::FromFunction(3, [&](Vertex, Direction d) {
        return d == lone ? lone_colour : Opposite(lone_colour);
      });
      EXPECT_FALSE(Classify(ToQ3(c)).good()) << "lone direction " << lone;
    }
  }
  EXPECT_EQ(kSplit, ToQ3(testutil::DirectionSplit(3)));
}

TEST(ClassifyTest, AgreesWithNaiveOracleAndBadCount) {
  int bad = 0;
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    const Classification cls = Classify(q);
    ASSERT_EQ(cls.good(), NaiveIsGood(q)) << "q=" << value;
    bad += !cls.good();
  }
  EXPECT_EQ(bad, kBadColourings);
}

TEST(ClassifyTest, WitnessIsValidAndTotalsAtMostTwo) {
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    const Classification cls = Classify(q);
    if (!cls.good()) {
      EXPECT_GT(cls.total_changes, 2);
      continue;
    }
    const EdgeColouring c = FromQ3(q);
    int total = 0;
    for (Vertex x = 0; x < 4; ++x) {
      const Geodesic& g = cls.witness[x];
      ASSERT_TRUE(g.valid(3));
      ASSERT_EQ(g.start, x);
      ASSERT_EQ(g.end(), 7 - x);
      total += ColourChanges(c, g);
    }
    EXPECT_EQ(total, cls.total_changes);
    EXPECT_LE(total, 2);
  }
}

TEST(ClassifyTest, InvariantUnderIsometriesAndComplement) {
  const auto perms = AllPermutations();
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    const bool good = Classify(q).good();
    for (const auto& perm : perms) {
      for (Vertex flip = 0; flip < 8; ++flip) {
        const Q3Colouring image = ApplyIsometry(q, perm, flip);
        ASSERT_EQ(Classify(image).good(), good);
        ASSERT_EQ(Classify(Complement(image)).good(), good);
      }
    }
  }
}

TEST(ClassifyTest, IsometryIsAColouringAutomorphismOfQ3) {
  // Identity is a no-op, and the map preserves the Red/Blue edge counts.
  const Q3Colouring q = 0b101100111010;
  EXPECT_EQ(ApplyIsometry(q, {0, 1, 2}, 0), q);
  for (const auto& perm : AllPermutations()) {
    for (Vertex flip = 0; flip < 8; ++flip) {
      EXPECT_EQ(std::popcount(ApplyIsometry(q, perm, flip)), std::popcount(q));
    }
  }
  // Swapping coordinates 0 and 1 sends the direction-0 split to the
  // direction-1 split.
  const Q3Colouring dir1_red = 0xF0F;
  EXPECT_EQ(ApplyIsometry(kSplit, {1, 0, 2}, 0), dir1_red);
}

TEST(ClassifyTest, BadColouringPairStructure) {
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    if (Classify(q).good()) continue;
    int change_free_pairs = 0;
    for (Vertex x = 0; x < 4; ++x) {
      const int m = Q3MinChanges(q, x);
      EXPECT_LE(m, 1) << "q=" << value << " pair " << x;
      change_free_pairs += m == 0;
    }
    EXPECT_LE(change_free_pairs, 1) << "q=" << value;
  }
}

TEST(LemmaTest, TwoChangePairForcingHoldsAndIsNonVacuous) {
  const LemmaReport r = VerifyTwoChangePairForcing();
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.hypothesis_hits, kTwoChangePairHypothesisColourings);
}

TEST(LemmaTest, TwoChangePairHypothesisUnmetOnMonochromatic) {
  // Every pair has a change-free geodesic, so the hypothesis never fires.
  for (Vertex x = 0; x < 4; ++x) EXPECT_EQ(Q3MinChanges(kAllRed, x), 0);
}

TEST(LemmaTest, MonochromaticStarForcesGood) {
  const LemmaReport r = VerifyMonochromaticStarGood();
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_GT(r.hypothesis_hits, 0);
  EXPECT_TRUE(MonochromaticStar(kAllRed, 0));
  EXPECT_TRUE(Classify(kAllRed).good());
}

TEST(LemmaTest, StarHypothesisUnmetOnSplit) {
  for (Vertex v = 0; v < 8; ++v) EXPECT_FALSE(MonochromaticStar(kSplit, v));
}

TEST(LemmaTest, BadColouringPatternsEverywhere) {
  const LemmaReport r = VerifyBadColouringPatterns();
  EXPECT_TRUE(r.counterexamples.empty());
  EXPECT_EQ(r.hypothesis_hits, kBadColourings);
}

TEST(LemmaTest, BadColouringPatternsSplitFromZero) {
  // Red first then Blue: (0,1,2) is Red, Blue, Blue. Blue first then Red:
  // (1,2,0) is Blue, Blue, Red.
  EXPECT_EQ(Q3Changes(kSplit, 0, {0, 1, 2}), 1);
  EXPECT_EQ(Q3EdgeColour(kSplit, 0, 0), Colour::kRed);
  EXPECT_EQ(Q3Changes(kSplit, 0, {1, 2, 0}), 1);
  EXPECT_EQ(Q3EdgeColour(kSplit, 0, 1), Colour::kBlue);
}

TEST(SelectGoodTest, Examples) {
  const SelectorEntry fwd = SelectGoodGeodesic(kAllRed, 0, 7);
  EXPECT_EQ(fwd.first, 1u);
  EXPECT_EQ(fwd.second, 3u);
  const SelectorEntry back = SelectGoodGeodesic(kAllRed, 7, 0);
  EXPECT_EQ(back.first, 3u);
  EXPECT_EQ(back.second, 1u);
}

TEST(SelectGoodTest, MinimalAndOrientationConsistent) {
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    if (!Classify(q).good()) continue;
    const EdgeColouring c = FromQ3(q);
    int total = 0;
    for (Vertex x = 0; x < 8; ++x) {
      const SelectorEntry e = SelectGoodGeodesic(q, x, 7 - x);
      const Geodesic g = e.geodesic();
      ASSERT_TRUE(g.valid(3));
      ASSERT_EQ(g.end(), 7 - x);
      const int chosen = ColourChanges(c, g);
      for (const Geodesic& other : EnumerateGeodesics(x, 7 - x)) {
        ASSERT_LE(chosen, ColourChanges(c, other));
      }
      const SelectorEntry rev = SelectGoodGeodesic(q, 7 - x, x);
      ASSERT_EQ(rev.first, e.second);
      ASSERT_EQ(rev.second, e.first);
      if (x < 4) total += chosen;
    }
    EXPECT_LE(total, 2) << "q=" << value;
  }
}

TEST(SelectBadTest, SplitExamples) {
  const SelectorEntry f1 = SelectBadGeodesic(kSplit, 0, 7, FVariant::kF1);
  EXPECT_EQ(f1.first, 2u);
  EXPECT_EQ(f1.second, 6u);
  const SelectorEntry f2 = SelectBadGeodesic(kSplit, 0, 7, FVariant::kF2);
  EXPECT_EQ(f2.first, 1u);
  EXPECT_EQ(f2.second, 3u);
  const SelectorEntry f1_rev = SelectBadGeodesic(kSplit, 7, 0, FVariant::kF1);
  EXPECT_EQ(f1_rev.first, 6u);
  EXPECT_EQ(f1_rev.second, 2u);
}

TEST(SelectBadTest, OneChangeWithVariantPattern) {
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    if (Classify(q).good()) continue;
    const EdgeColouring c = FromQ3(q);
    for (Vertex x = 0; x < 8; ++x) {
      for (FVariant variant : {FVariant::kF1, FVariant::kF2}) {
        const SelectorEntry e = SelectBadGeodesic(q, x, 7 - x, variant);
        const Geodesic g = e.geodesic();
        ASSERT_TRUE(g.valid(3));
        ASSERT_EQ(ColourChanges(c, g), 1);
        const Vertex even = ParityOf(x) == Parity::kEven ? x : 7 - x;
        const Vertex even_nbr = even == x ? e.first : e.second;
        const Vertex odd_nbr = even == x ? e.second : e.first;
        const Colour want = variant == FVariant::kF1 ? Colour::kBlue : Colour::kRed;
        ASSERT_EQ(c.edge_colour(even, even_nbr), want);
        ASSERT_EQ(c.edge_colour(7 - even, odd_nbr), Opposite(want));
        const SelectorEntry rev = SelectBadGeodesic(q, 7 - x, x, variant);
        ASSERT_EQ(rev.first, e.second);
        ASSERT_EQ(rev.second, e.first);
      }
    }
  }
}

TEST(SelectorTest, RejectWrongKindOrPair) {
  EXPECT_THROW(SelectGoodGeodesic(kSplit, 0, 7), std::invalid_argument);
  EXPECT_THROW(SelectBadGeodesic(kAllRed, 0, 7, FVariant::kF1), std::invalid_argument);
  EXPECT_THROW(SelectGoodGeodesic(kAllRed, 0, 3), std::invalid_argument);
  EXPECT_THROW(SelectBadGeodesic(kSplit, 1, 7, FVariant::kF2), std::invalid_argument);
}

TEST(Q3TableTest, AgreesWithOnDemandComputation) {
  const Q3Table& table = Q3Table::Get();
  ASSERT_EQ(table.size(), static_cast<std::size_t>(kQ3Colourings));
  EXPECT_TRUE(table[kAllRed].good);
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    const Q3Entry& entry = table[q];
    ASSERT_EQ(entry.good, Classify(q).good());
    for (Vertex x = 0; x < 8; ++x) {
      if (entry.good) {
        ASSERT_EQ(entry.selectors[0][x], SelectGoodGeodesic(q, x, 7 - x));
        ASSERT_EQ(entry.selectors[1][x], entry.selectors[0][x]);
      } else {
        ASSERT_EQ(entry.selectors[0][x], SelectBadGeodesic(q, x, 7 - x, FVariant::kF1));
        ASSERT_EQ(entry.selectors[1][x], SelectBadGeodesic(q, x, 7 - x, FVariant::kF2));
      }
    }
  }
}

}  // namespace
}  // namespace hypercol
