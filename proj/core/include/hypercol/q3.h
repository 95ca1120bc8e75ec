// Good/bad classification of 2-coloured 3-cubes, exhaustive checks of the
// structural lemmas about them, and the local geodesic selectors the global
// construction is assembled from.
//
// A Q3 colouring is the 12-bit edge string of Q_3 in edge_index order
// (bit 4*d + compress(u, d) is the edge from u in direction d; set = Blue).
// The four antipodal pairs are {0,7}, {1,6}, {2,5}, {3,4}.

#ifndef HYPERCOL_Q3_H_
#define HYPERCOL_Q3_H_

#include <array>
#include <cstdint>
#include <vector>

#include "hypercol/hypercube.h"

namespace hypercol {

using Q3Colouring = std::uint16_t;
inline constexpr int kQ3Colourings = 1 << 12;
inline constexpr Q3Colouring kQ3Mask = 0x0FFF;

// Which bad-cube selector family is in use. F1 puts Blue at the even endpoint
// and Red at the odd one; F2 the reverse.
enum class FVariant : std::uint8_t { kF1 = 0, kF2 = 1 };

constexpr FVariant OtherVariant(FVariant v) {
  return v == FVariant::kF1 ? FVariant::kF2 : FVariant::kF1;
}

constexpr Colour Q3EdgeColour(Q3Colouring q, Vertex u, Direction d) {
  const Vertex canon = u & ~DirMask(d);
  return static_cast<Colour>((q >> (4 * d + Compress(canon, d))) & 1);
}

Q3Colouring ToQ3(const EdgeColouring& c);  // requires dimension 3
EdgeColouring FromQ3(Q3Colouring q);

// The colouring of Q_n restricted to a subcube, in local coordinates.
Q3Colouring Restrict(const EdgeColouring& c, const Subcube& s);

// The six direction orders of a length-3 geodesic, lexicographic.
inline constexpr std::array<std::array<Direction, 3>, 6> kQ3Orders = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

int Q3Changes(Q3Colouring q, Vertex start, const std::array<Direction, 3>& order);

// Fewest colour changes over the six geodesics from x to its antipode.
int Q3MinChanges(Q3Colouring q, Vertex x);

enum class Q3Kind : std::uint8_t { kGood, kBad };

struct Classification {
  Q3Kind kind = Q3Kind::kBad;
  // Smallest achievable total over one geodesic per antipodal pair. The
  // colouring is good exactly when this is at most 2.
  int total_changes = 0;
  // Filled for good colourings: one geodesic from x to 7 - x for x = 0..3.
  std::array<Geodesic, 4> witness;

  bool good() const { return kind == Q3Kind::kGood; }
};

// Exhaustive over the 6^4 assignments; ties keep the lexicographically first
// assignment.
Classification Classify(Q3Colouring q);

struct SelectorEntry {
  Vertex from = 0;
  Vertex first = 0;   // neighbour of `from` on the chosen geodesic
  Vertex second = 0;  // neighbour of `to`
  Vertex to = 0;

  Geodesic geodesic() const;
  friend bool operator==(const SelectorEntry&, const SelectorEntry&) = default;
};

// Requires a good colouring and x ^ y == 7. Picks a minimum-change geodesic,
// the lexicographically smallest direction order measured from the even
// endpoint, and reports it oriented from x.
SelectorEntry SelectGoodGeodesic(Q3Colouring q, Vertex x, Vertex y);

// Requires a bad colouring and x ^ y == 7. Picks a geodesic with exactly one
// colour change whose edge at the even endpoint is Blue (F1) or Red (F2),
// lexicographically smallest from the even endpoint, oriented from x.
SelectorEntry SelectBadGeodesic(Q3Colouring q, Vertex x, Vertex y, FVariant variant);

struct LemmaReport {
  std::vector<Q3Colouring> counterexamples;
  // Colourings meeting the lemma's hypothesis.
  int hypothesis_hits = 0;
};

// If some antipodal pair has all six geodesics at two changes, each other
// pair has a change-free geodesic.
LemmaReport VerifyTwoChangePairForcing();
// A vertex whose three edges share a colour forces a good colouring.
LemmaReport VerifyMonochromaticStarGood();
// In a bad colouring every vertex v has one-change geodesics to v' in both
// patterns: Red at v and Blue at v', and Blue at v and Red at v'.
LemmaReport VerifyBadColouringPatterns();

// True when the three edges at v share a colour.
bool MonochromaticStar(Q3Colouring q, Vertex v);

// Isometries of Q3: x -> permute(x) ^ flip, where bit i of x moves to bit
// perm[i].
Q3Colouring ApplyIsometry(Q3Colouring q, const std::array<Direction, 3>& perm, Vertex flip);
constexpr Q3Colouring Complement(Q3Colouring q) { return q ^ kQ3Mask; }

struct Q3Entry {
  bool good = false;
  // selectors[variant][x]: the chosen geodesic from x to 7 - x. Both variants
  // coincide on good colourings.
  std::array<std::array<SelectorEntry, 8>, 2> selectors;
};

// Memo of Classify and the selectors for all 4096 colourings. Built once on
// first use and read-only afterwards.
class Q3Table {
 public:
  static const Q3Table& Get();

  const Q3Entry& operator[](Q3Colouring q) const { return entries_[q]; }
  std::size_t size() const { return entries_.size(); }

 private:
  Q3Table();
  std::vector<Q3Entry> entries_;
};

}  // namespace hypercol

#endif  // HYPERCOL_Q3_H_
