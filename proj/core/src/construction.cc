#include "hypercol/construction.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace hypercol {
namespace {

void RequireDivisibleByThree(int n) {
  if (n < 3 || n % 3 != 0) {
    throw std::invalid_argument("dimension must be a positive multiple of 3, got n=" +
                                std::to_string(n));
  }
}

void RequireAtLeastThree(int n) {
  if (n < 3) {
    throw std::invalid_argument("dimension must be at least 3, got n=" + std::to_string(n));
  }
}

Subcube SubcubeFromMask(Vertex anchor, Vertex mask) {
  Subcube s;
  s.anchor = anchor & ~mask;
  for (int i = 0; i < 3; ++i) {
    s.dirs[i] = std::countr_zero(mask);
    mask &= mask - 1;
  }
  return s;
}

// The bad-cube patterns are stated for the global parity of the endpoints, the
// Q3 selectors for the local one. They agree exactly when the anchor is even.
FVariant LocalVariant(Vertex anchor, FVariant variant) {
  return ParityOf(anchor) == Parity::kEven ? variant : OtherVariant(variant);
}

int LocalChanges(Q3Colouring q, const SelectorEntry& e) {
  const Colour c0 = Q3EdgeColour(q, e.from, std::countr_zero(e.from ^ e.first));
  const Colour c1 = Q3EdgeColour(q, e.first, std::countr_zero(e.first ^ e.second));
  const Colour c2 = Q3EdgeColour(q, e.second, std::countr_zero(e.second ^ e.to));
  return (c0 != c1) + (c1 != c2);
}

std::vector<std::pair<int, int>> DisjointTriplePairs(const std::vector<Vertex>& triples) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      if ((triples[i] & triples[j]) == 0) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return pairs;
}

// Per (vertex u, triple t), stored at u * T + t: whether the subcube through u
// spanned by t is good, and for each variant the colour of the chosen
// geodesic's edge at u and the number of changes along it.
struct BlockField {
  int n = 0;
  std::vector<Vertex> triples;
  std::vector<std::uint8_t> good;
  std::array<std::vector<std::uint8_t>, 2> edge_colour;
  std::array<std::vector<std::uint8_t>, 2> changes;

  std::size_t at(Vertex u, std::size_t t) const { return u * triples.size() + t; }
};

BlockField BuildField(const EdgeColouring& c) {
  BlockField field;
  field.n = c.dimension();
  field.triples = DirectionTriples(field.n);
  const std::size_t cells = (std::size_t{1} << field.n) * field.triples.size();
  field.good.assign(cells, 0);
  for (auto& v : field.edge_colour) v.assign(cells, 0);
  for (auto& v : field.changes) v.assign(cells, 0);

  const Q3Table& table = Q3Table::Get();
  const Vertex full = FullMask(field.n);
  for (std::size_t t = 0; t < field.triples.size(); ++t) {
    const Vertex mask = field.triples[t];
    for (Vertex anchor = 0; anchor <= full; ++anchor) {
      if (anchor & mask) continue;
      const Subcube sub = SubcubeFromMask(anchor, mask);
      const Q3Colouring q = Restrict(c, sub);
      const Q3Entry& entry = table[q];
      for (Vertex x = 0; x < 8; ++x) {
        const std::size_t cell = field.at(sub.to_global(x), t);
        field.good[cell] = entry.good;
        for (int vi = 0; vi < 2; ++vi) {
          const auto local = LocalVariant(anchor, static_cast<FVariant>(vi));
          const SelectorEntry& sel = entry.selectors[static_cast<int>(local)][x];
          field.edge_colour[vi][cell] = static_cast<std::uint8_t>(
              Q3EdgeColour(q, x, std::countr_zero(x ^ sel.first)));
          field.changes[vi][cell] = static_cast<std::uint8_t>(LocalChanges(q, sel));
        }
      }
    }
  }
  return field;
}

}  // namespace

std::string FormatFraction(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

double ToDouble(const Fraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

std::vector<Vertex> DirectionTriples(int n) {
  std::vector<Vertex> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) out.push_back(DirMask(i) | DirMask(j) | DirMask(k));
    }
  }
  return out;
}

Q3Colouring FSelector::Local(const Subcube& s) {
  const std::uint64_t key = (std::uint64_t{s.anchor} << 32) | s.mask();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const Q3Colouring q = Restrict(*colouring_, s);
  memo_.emplace(key, q);
  return q;
}

SelectorEntry FSelector::Select(Vertex v, Vertex w, FVariant variant) {
  const Subcube sub = SubcubeOfPair(v, w);
  const Q3Entry& entry = Q3Table::Get()[Local(sub)];
  const auto local = LocalVariant(sub.anchor, variant);
  const SelectorEntry& sel = entry.selectors[static_cast<int>(local)][sub.to_local(v)];
  return {v, sub.to_global(sel.first), sub.to_global(sel.second), w};
}

Vertex FValue(const EdgeColouring& c, Vertex v, Vertex w, FVariant variant) {
  FSelector f(c);
  return f.Value(v, w, variant);
}

BlockDecomposition BlockDecomposition::FromPermutation(Vertex start,
                                                       const std::vector<Direction>& perm) {
  if (perm.size() % 3 != 0) {
    throw std::invalid_argument("permutation length must be a multiple of 3");
  }
  BlockDecomposition bd;
  bd.start = start;
  for (std::size_t i = 0; i < perm.size(); i += 3) {
    bd.triples.push_back(DirMask(perm[i]) | DirMask(perm[i + 1]) | DirMask(perm[i + 2]));
  }
  return bd;
}

void BlockDecomposition::Validate(int n) const {
  if (start > FullMask(n)) throw std::invalid_argument("start vertex out of range");
  Vertex seen = 0;
  for (Vertex t : triples) {
    if (std::popcount(t) != 3 || (t & ~FullMask(n)) || (t & seen)) {
      throw std::invalid_argument("block triples must partition the directions");
    }
    seen |= t;
  }
  if (seen != FullMask(n)) {
    throw std::invalid_argument("block triples must partition the directions");
  }
}

Geodesic ModifyGeodesic(FSelector& f, int n, const BlockDecomposition& bd, FVariant variant) {
  RequireDivisibleByThree(n);
  bd.Validate(n);
  Geodesic out{bd.start, {}};
  out.dirs.reserve(n);
  Vertex v = bd.start;
  for (Vertex t : bd.triples) {
    const Vertex w = v ^ t;
    const SelectorEntry e = f.Select(v, w, variant);
    out.dirs.push_back(std::countr_zero(e.from ^ e.first));
    out.dirs.push_back(std::countr_zero(e.first ^ e.second));
    out.dirs.push_back(std::countr_zero(e.second ^ e.to));
    v = w;
  }
  return out;
}

Geodesic ModifyGeodesic(const EdgeColouring& c, const BlockDecomposition& bd, FVariant variant) {
  FSelector f(c);
  return ModifyGeodesic(f, c.dimension(), bd, variant);
}

ExactStats ComputeExactStats(const EdgeColouring& c) {
  const int n = c.dimension();
  RequireAtLeastThree(n);
  const BlockField field = BuildField(c);
  const std::size_t T = field.triples.size();
  const Vertex full = FullMask(n);

  ExactStats stats;
  stats.n = n;
  stats.good_count_at.assign(std::size_t{full} + 1, 0);
  std::int64_t incidences = 0;
  for (Vertex u = 0; u <= full; ++u) {
    int count = 0;
    for (std::size_t t = 0; t < T; ++t) count += field.good[field.at(u, t)];
    stats.good_count_at[u] = count;
    incidences += count;
  }
  stats.subcubes = static_cast<std::int64_t>(T) << (n - 3);
  stats.good_subcubes = incidences / 8;
  stats.p = Fraction(stats.good_subcubes, stats.subcubes);

  if (n >= 6) {
    const auto pairs = DisjointTriplePairs(field.triples);
    for (Vertex u = 0; u <= full; ++u) {
      for (const auto& [t1, t2] : pairs) {
        const int goods = field.good[field.at(u, t1)] + field.good[field.at(u, t2)];
        stats.good_good_pairs += goods == 2;
        stats.mixed_pairs += goods == 1;
      }
    }
    stats.neighbour_pairs = static_cast<std::int64_t>(pairs.size()) << n;
    stats.a = Fraction(stats.good_good_pairs, stats.neighbour_pairs);
    stats.b = Fraction(stats.mixed_pairs, stats.neighbour_pairs);
  }
  return stats;
}

JunctionCensus CensusJunctions(const EdgeColouring& c) {
  const int n = c.dimension();
  RequireAtLeastThree(n);
  const BlockField field = BuildField(c);
  const auto pairs = DisjointTriplePairs(field.triples);

  // Each unordered pair stands for both orders; the change indicator is
  // symmetric, so every count is doubled.
  JunctionCensus census;
  for (Vertex u = 0; u <= FullMask(n); ++u) {
    for (const auto& [t1, t2] : pairs) {
      const std::size_t c1 = field.at(u, t1);
      const std::size_t c2 = field.at(u, t2);
      const int goods = field.good[c1] + field.good[c2];
      std::array<bool, 2> change{};
      for (int vi = 0; vi < 2; ++vi) {
        change[vi] = field.edge_colour[vi][c1] != field.edge_colour[vi][c2];
      }
      if (goods == 2) {
        census.good_good += 2;
        for (int vi = 0; vi < 2; ++vi) census.good_good_changes[vi] += 2 * change[vi];
      } else if (goods == 1) {
        census.mixed += 2;
        for (int vi = 0; vi < 2; ++vi) census.mixed_changes[vi] += 2 * change[vi];
        if (change[0] == change[1]) census.mixed_parity_violations += 2;
      } else {
        census.bad_bad += 2;
        for (int vi = 0; vi < 2; ++vi) census.bad_bad_changes[vi] += 2 * change[vi];
      }
    }
  }
  census.total = census.good_good + census.mixed + census.bad_bad;
  return census;
}

FVariant ChooseVariant(const JunctionCensus& census) {
  return 2 * census.mixed_changes[0] <= census.mixed ? FVariant::kF1 : FVariant::kF2;
}

FVariant ChooseVariant(const EdgeColouring& c) {
  RequireDivisibleByThree(c.dimension());
  return ChooseVariant(CensusJunctions(c));
}

Expectation ExactExpectation(const EdgeColouring& c, FVariant variant) {
  const int n = c.dimension();
  RequireDivisibleByThree(n);
  const BlockField field = BuildField(c);
  const int vi = static_cast<int>(variant);

  std::int64_t block_changes = 0;
  for (std::uint8_t ch : field.changes[vi]) block_changes += ch;

  std::int64_t junction_changes = 0;
  const auto pairs = DisjointTriplePairs(field.triples);
  for (Vertex u = 0; u <= FullMask(n); ++u) {
    for (const auto& [t1, t2] : pairs) {
      junction_changes +=
          2 * (field.edge_colour[vi][field.at(u, t1)] != field.edge_colour[vi][field.at(u, t2)]);
    }
  }
  const std::int64_t junctions = static_cast<std::int64_t>(pairs.size()) << (n + 1);

  const std::int64_t k = n / 3;
  Expectation e;
  e.block_mean = Fraction(block_changes, static_cast<std::int64_t>(field.changes[vi].size()));
  e.junction_mean = junctions == 0 ? Fraction(0) : Fraction(junction_changes, junctions);
  e.expectation = e.block_mean * k + e.junction_mean * (k - 1);
  return e;
}

MonteCarloResult MonteCarloMean(const EdgeColouring& c, FVariant variant,
                                std::int64_t samples, std::uint64_t seed) {
  const int n = c.dimension();
  RequireDivisibleByThree(n);
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");

  std::mt19937_64 rng(seed);
  FSelector f(c);
  std::vector<Direction> perm(n);
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const Vertex start = static_cast<Vertex>(rng()) & FullMask(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto bd = BlockDecomposition::FromPermutation(start, perm);
    const double x = ColourChanges(c, ModifyGeodesic(f, n, bd, variant));
    // Welford update.
    const double delta = x - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (x - mean);
  }
  MonteCarloResult out;
  out.samples = samples;
  out.mean = mean;
  if (samples > 1) {
    const double variance = m2 / static_cast<double>(samples - 1);
    out.standard_error = std::sqrt(variance / static_cast<double>(samples));
  }
  return out;
}

ConstructionReport BuildReport(const EdgeColouring& c, std::optional<FVariant> variant) {
  RequireDivisibleByThree(c.dimension());
  ConstructionReport report;
  report.stats = ComputeExactStats(c);
  report.census = CensusJunctions(c);
  report.chosen_automatically = !variant.has_value();
  report.chosen = variant.value_or(ChooseVariant(report.census));
  report.expectation = ExactExpectation(c, report.chosen);
  return report;
}

}  // namespace hypercol
