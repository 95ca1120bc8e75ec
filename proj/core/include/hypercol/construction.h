// The block construction on Q_n with n = 3k: cut an antipodal geodesic into
// k blocks of three steps, and reroute each block v_{3j} -> v_{3j+3} along a
// geodesic chosen inside the 3-subcube the block spans. The choice inside a
// subcube is the selector f; on bad subcubes it comes in two variants.
//
// Everything here is exact counting over the whole cube: the fraction of good
// subcubes, the good/mixed fractions over pairs of subcubes meeting in one
// vertex, and the expected number of colour changes on a uniformly random
// rerouted geodesic.

#ifndef HYPERCOL_CONSTRUCTION_H_
#define HYPERCOL_CONSTRUCTION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "hypercol/hypercube.h"
#include "hypercol/q3.h"

namespace hypercol {

using Fraction = boost::rational<std::int64_t>;

// "num/den", always with the denominator.
std::string FormatFraction(const Fraction& f);
double ToDouble(const Fraction& f);

// Bitmasks of all 3-element direction sets of Q_n, lexicographic in the
// sorted direction triple.
std::vector<Vertex> DirectionTriples(int n);

// f and its variants, evaluated on demand with the restricted subcube
// colourings memoised per subcube. Not thread-safe; use one per task.
class FSelector {
 public:
  explicit FSelector(const EdgeColouring& c) : colouring_(&c) {}

  // The chosen geodesic between v and w (distance 3), oriented from v:
  // {v, f(v,w), f(w,v), w}.
  SelectorEntry Select(Vertex v, Vertex w, FVariant variant);
  Vertex Value(Vertex v, Vertex w, FVariant variant) { return Select(v, w, variant).first; }

  bool Good(const Subcube& s) { return Q3Table::Get()[Local(s)].good; }
  Q3Colouring Local(const Subcube& s);

 private:
  const EdgeColouring* colouring_;
  std::unordered_map<std::uint64_t, Q3Colouring> memo_;
};

// Throws std::invalid_argument unless popcount(v ^ w) == 3.
Vertex FValue(const EdgeColouring& c, Vertex v, Vertex w, FVariant variant);

// A base antipodal geodesic viewed as k consecutive blocks. Only the
// unordered direction set of each block matters to the construction.
struct BlockDecomposition {
  Vertex start = 0;
  std::vector<Vertex> triples;  // direction masks, three bits each

  // Chunks a permutation of [0, n) into consecutive triples.
  static BlockDecomposition FromPermutation(Vertex start, const std::vector<Direction>& perm);

  // Throws std::invalid_argument unless the triples partition [0, n).
  void Validate(int n) const;
};

// Throws std::invalid_argument when 3 does not divide n or bd is invalid.
Geodesic ModifyGeodesic(const EdgeColouring& c, const BlockDecomposition& bd, FVariant variant);
Geodesic ModifyGeodesic(FSelector& f, int n, const BlockDecomposition& bd, FVariant variant);

struct ExactStats {
  int n = 0;
  std::int64_t subcubes = 0;
  std::int64_t good_subcubes = 0;
  Fraction p;
  // Present when n >= 6: over all (vertex u, unordered pair of disjoint
  // triples), the fraction with both subcubes good (a) and exactly one good (b).
  std::int64_t neighbour_pairs = 0;
  std::int64_t good_good_pairs = 0;
  std::int64_t mixed_pairs = 0;
  std::optional<Fraction> a;
  std::optional<Fraction> b;
  // Number of good subcubes containing each vertex.
  std::vector<int> good_count_at;
};

// Requires n >= 3.
ExactStats ComputeExactStats(const EdgeColouring& c);

// Junction configurations: a vertex u with an ordered pair of disjoint triples
// (incoming, outgoing). A configuration changes colour under a variant when
// the chosen geodesics of the two subcubes leave u along edges of different
// colours.
struct JunctionCensus {
  std::int64_t total = 0;
  std::int64_t good_good = 0;
  std::int64_t mixed = 0;
  std::int64_t bad_bad = 0;
  // Indexed by FVariant.
  std::array<std::int64_t, 2> good_good_changes{};
  std::array<std::int64_t, 2> mixed_changes{};
  std::array<std::int64_t, 2> bad_bad_changes{};
  // Mixed configurations where the two variants do not disagree.
  std::int64_t mixed_parity_violations = 0;
};

// Requires n >= 3.
JunctionCensus CensusJunctions(const EdgeColouring& c);

// F1 when its mixed-junction change count is at most half the mixed total
// (including when there are no mixed junctions), else F2.
FVariant ChooseVariant(const JunctionCensus& census);
// Requires 3 | n.
FVariant ChooseVariant(const EdgeColouring& c);

struct Expectation {
  Fraction block_mean;     // mean changes inside one block
  Fraction junction_mean;  // mean change indicator at one junction
  Fraction expectation;    // k * block_mean + (k - 1) * junction_mean
};

// Exact mean of ColourChanges over the rerouted geodesic of a uniformly
// random (start vertex, direction permutation). Requires 3 | n.
Expectation ExactExpectation(const EdgeColouring& c, FVariant variant);

struct MonteCarloResult {
  double mean = 0.0;
  double standard_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::int64_t samples = 0;
};

// Deterministic in seed. Requires 3 | n and samples >= 1.
MonteCarloResult MonteCarloMean(const EdgeColouring& c, FVariant variant,
                                std::int64_t samples, std::uint64_t seed);

struct ConstructionReport {
  ExactStats stats;
  JunctionCensus census;
  FVariant chosen = FVariant::kF1;
  bool chosen_automatically = true;
  Expectation expectation;
};

// Requires 3 | n. `variant` overrides the automatic choice.
ConstructionReport BuildReport(const EdgeColouring& c, std::optional<FVariant> variant);

}  // namespace hypercol

#endif  // HYPERCOL_CONSTRUCTION_H_
