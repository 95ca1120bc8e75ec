#include "hypercol/search.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypercol/codec.h"

namespace hypercol {
namespace {

constexpr std::uint8_t kUnreached = std::numeric_limits<std::uint8_t>::max();

// remaining[2 * S + col]: fewest further changes to finish from the vertex
// v ^ S having arrived along an edge of colour col.
void FillRemaining(const EdgeColouring& c, Vertex v, std::vector<std::uint8_t>& remaining) {
  const int n = c.dimension();
  const Vertex full = FullMask(n);
  remaining.assign((std::size_t{full} + 1) * 2, kUnreached);
  remaining[2 * full] = remaining[2 * full + 1] = 0;
  for (Vertex s = full; s-- > 1;) {
    const Vertex at = v ^ s;
    std::uint8_t best[2] = {kUnreached, kUnreached};
    for (Vertex free = full & ~s; free != 0; free &= free - 1) {
      const Direction d = std::countr_zero(free);
      const auto col = static_cast<int>(c.colour(at, d));
      const std::uint8_t rest = remaining[2 * (s | DirMask(d)) + col];
      best[col] = std::min(best[col], rest);
      best[1 - col] = std::min<std::uint8_t>(best[1 - col], rest + 1);
    }
    remaining[2 * s] = best[0];
    remaining[2 * s + 1] = best[1];
  }
}

MinChangesResult Solve(const EdgeColouring& c, Vertex v, std::vector<std::uint8_t>& remaining) {
  const int n = c.dimension();
  const Vertex full = FullMask(n);
  MinChangesResult out;
  out.from = v;
  out.to = v ^ full;
  out.witness.start = v;
  FillRemaining(c, v, remaining);

  // First step: no previous colour to compare against.
  int best = std::numeric_limits<int>::max();
  Direction first = 0;
  for (Direction d = 0; d < n; ++d) {
    const int cost = remaining[2 * DirMask(d) + static_cast<int>(c.colour(v, d))];
    if (cost < best) {
      best = cost;
      first = d;
    }
  }
  out.changes = best;

  Vertex s = DirMask(first);
  int col = static_cast<int>(c.colour(v, first));
  out.witness.dirs.push_back(first);
  while (s != full) {
    const int target = remaining[2 * s + col];
    for (Vertex free = full & ~s; free != 0; free &= free - 1) {
      const Direction d = std::countr_zero(free);
      const int next_col = static_cast<int>(c.colour(v ^ s, d));
      if ((next_col != col) + remaining[2 * (s | DirMask(d)) + next_col] == target) {
        out.witness.dirs.push_back(d);
        s |= DirMask(d);
        col = next_col;
        break;
      }
    }
  }
  return out;
}

// Hill-climbing objective: the minimum first, then fewer antipodal pairs
// attaining it, so plateaus of equal minimum still have a gradient.
struct Score {
  int value;
  int pairs_at_value;
  auto Key() const { return std::pair(value, -pairs_at_value); }
  bool operator>(const Score& o) const { return Key() > o.Key(); }
  bool operator>=(const Score& o) const { return Key() >= o.Key(); }
};

Score Evaluate(const EdgeColouring& c, std::vector<std::uint8_t>& remaining) {
  const int n = c.dimension();
  Score score{std::numeric_limits<int>::max(), 0};
  for (Vertex v = 0; v < (Vertex{1} << (n - 1)); ++v) {
    FillRemaining(c, v, remaining);
    int best = std::numeric_limits<int>::max();
    for (Direction d = 0; d < n; ++d) {
      best = std::min<int>(best, remaining[2 * DirMask(d) + static_cast<int>(c.colour(v, d))]);
    }
    if (best < score.value) {
      score = {best, 1};
    } else if (best == score.value) {
      ++score.pairs_at_value;
    }
  }
  return score;
}

}  // namespace

MinChangesResult MinChangesFrom(const EdgeColouring& c, Vertex v) {
  if (v > FullMask(c.dimension())) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<std::uint8_t> remaining;
  return Solve(c, v, remaining);
}

MinChangesResult MinAntipodalChanges(const EdgeColouring& c) {
  const int n = c.dimension();
  std::vector<std::uint8_t> remaining;
  MinChangesResult best = Solve(c, 0, remaining);
  for (Vertex v = 1; v < (Vertex{1} << (n - 1)) && best.changes > 0; ++v) {
    MinChangesResult r = Solve(c, v, remaining);
    if (r.changes < best.changes) best = std::move(r);
  }
  return best;
}

MinChangesResult BruteForceMin(const EdgeColouring& c) {
  const int n = c.dimension();
  if (n > 7) {
    throw std::invalid_argument("brute force is limited to n <= 7, got n=" + std::to_string(n));
  }
  MinChangesResult best;
  best.changes = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < (Vertex{1} << (n - 1)); ++v) {
    for (Geodesic& g : EnumerateGeodesics(v, Antipode(v, n))) {
      const int changes = ColourChanges(c, g);
      if (changes < best.changes) {
        best.from = v;
        best.to = Antipode(v, n);
        best.changes = changes;
        best.witness = std::move(g);
      }
    }
  }
  return best;
}

AdversaryResult AdversarySearch(int n, std::uint64_t seed, std::int64_t iterations) {
  if (n < 3 || n > 12) {
    throw std::invalid_argument("adversary search needs 3 <= n <= 12, got n=" + std::to_string(n));
  }
  if (iterations < 0) throw std::invalid_argument("iterations must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_edge(0, EdgeCount(n) - 1);
  const std::int64_t patience = static_cast<std::int64_t>(n) << n;
  std::vector<std::uint8_t> remaining;

  EdgeColouring current = RandomColouring(n, rng());
  Score score = Evaluate(current, remaining);
  AdversaryResult result{current, score.value, 0};
  std::int64_t stale = 0;
  for (std::int64_t it = 0; it < iterations; ++it) {
    EdgeColouring candidate = current.WithFlipped(pick_edge(rng));
    const Score candidate_score = Evaluate(candidate, remaining);
    stale = candidate_score > score ? 0 : stale + 1;
    if (candidate_score >= score) {
      current = std::move(candidate);
      score = candidate_score;
    }
    if (score.value > result.value) {
      result.best = current;
      result.value = score.value;
    }
    if (stale >= patience) {
      current = RandomColouring(n, rng());
      score = Evaluate(current, remaining);
      stale = 0;
      ++result.restarts;
      if (score.value > result.value) {
        result.best = current;
        result.value = score.value;
      }
    }
  }
  return result;
}

}  // namespace hypercol
