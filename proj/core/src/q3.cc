#include "hypercol/q3.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hypercol {
namespace {

constexpr Vertex kQ3Full = 7;

void CheckAntipodal(Vertex x, Vertex y) {
  if (x > kQ3Full || y > kQ3Full || (x ^ y) != kQ3Full) {
    throw std::invalid_argument("vertices " + std::to_string(x) + " and " +
                                std::to_string(y) + " are not antipodal in Q3");
  }
}

Vertex EvenEndpoint(Vertex x, Vertex y) {
  return ParityOf(x) == Parity::kEven ? x : y;
}

// Orients the geodesic e -> e' with the given order so that it starts at x.
SelectorEntry Orient(Vertex e, const std::array<Direction, 3>& order, Vertex x) {
  const Vertex a = e ^ DirMask(order[0]);
  const Vertex b = a ^ DirMask(order[1]);
  const Vertex end = e ^ kQ3Full;
  if (x == e) return {e, a, b, end};
  return {end, b, a, e};
}

SelectorEntry PickGood(Q3Colouring q, Vertex x) {
  const Vertex e = EvenEndpoint(x, x ^ kQ3Full);
  int best = 3;
  std::size_t chosen = 0;
  for (std::size_t i = 0; i < kQ3Orders.size(); ++i) {
    const int c = Q3Changes(q, e, kQ3Orders[i]);
    if (c < best) {
      best = c;
      chosen = i;
    }
  }
  return Orient(e, kQ3Orders[chosen], x);
}

SelectorEntry PickBad(Q3Colouring q, Vertex x, FVariant variant) {
  const Vertex e = EvenEndpoint(x, x ^ kQ3Full);
  const Colour at_even = variant == FVariant::kF1 ? Colour::kBlue : Colour::kRed;
  for (const auto& order : kQ3Orders) {
    const Vertex b = e ^ DirMask(order[0]) ^ DirMask(order[1]);
    if (Q3Changes(q, e, order) == 1 && Q3EdgeColour(q, e, order[0]) == at_even &&
        Q3EdgeColour(q, b, order[2]) == Opposite(at_even)) {
      return Orient(e, order, x);
    }
  }
  throw std::logic_error("no one-change geodesic with the required end colours");
}

}  // namespace

Q3Colouring ToQ3(const EdgeColouring& c) {
  if (c.dimension() != 3) {
    throw std::invalid_argument("expected a colouring of Q3, got n=" +
                                std::to_string(c.dimension()));
  }
  return static_cast<Q3Colouring>(c.words()[0] & kQ3Mask);
}

EdgeColouring FromQ3(Q3Colouring q) {
  return EdgeColouring(3, {static_cast<std::uint64_t>(q & kQ3Mask)});
}

Q3Colouring Restrict(const EdgeColouring& c, const Subcube& s) {
  Q3Colouring q = 0;
  for (Direction d = 0; d < 3; ++d) {
    for (Vertex k = 0; k < 4; ++k) {
      // k enumerates the local canonical endpoints of direction d.
      const Vertex low = k & (DirMask(d) - 1);
      const Vertex local = low | ((k >> d) << (d + 1));
      if (c.colour(s.to_global(local), s.dirs[d]) == Colour::kBlue) {
        q |= static_cast<Q3Colouring>(1u << (4 * d + k));
      }
    }
  }
  return q;
}

int Q3Changes(Q3Colouring q, Vertex start, const std::array<Direction, 3>& order) {
  const Vertex a = start ^ DirMask(order[0]);
  const Vertex b = a ^ DirMask(order[1]);
  const Colour c0 = Q3EdgeColour(q, start, order[0]);
  const Colour c1 = Q3EdgeColour(q, a, order[1]);
  const Colour c2 = Q3EdgeColour(q, b, order[2]);
  return (c0 != c1) + (c1 != c2);
}

int Q3MinChanges(Q3Colouring q, Vertex x) {
  int best = 2;
  for (const auto& order : kQ3Orders) best = std::min(best, Q3Changes(q, x, order));
  return best;
}

Classification Classify(Q3Colouring q) {
  std::array<std::array<int, 6>, 4> changes{};
  for (Vertex x = 0; x < 4; ++x) {
    for (int i = 0; i < 6; ++i) changes[x][i] = Q3Changes(q, x, kQ3Orders[i]);
  }
  int best = 9;
  std::array<int, 4> pick{};
  for (int i0 = 0; i0 < 6; ++i0) {
    for (int i1 = 0; i1 < 6; ++i1) {
      for (int i2 = 0; i2 < 6; ++i2) {
        for (int i3 = 0; i3 < 6; ++i3) {
          const int total = changes[0][i0] + changes[1][i1] + changes[2][i2] +
                            changes[3][i3];
          if (total < best) {
            best = total;
            pick = {i0, i1, i2, i3};
          }
        }
      }
    }
  }
  Classification out;
  out.total_changes = best;
  out.kind = best <= 2 ? Q3Kind::kGood : Q3Kind::kBad;
  if (out.good()) {
    for (Vertex x = 0; x < 4; ++x) {
      const auto& order = kQ3Orders[pick[x]];
      out.witness[x] = Geodesic{x, {order.begin(), order.end()}};
    }
  }
  return out;
}

Geodesic SelectorEntry::geodesic() const {
  return Geodesic{from,
                  {std::countr_zero(from ^ first), std::countr_zero(first ^ second),
                   std::countr_zero(second ^ to)}};
}

SelectorEntry SelectGoodGeodesic(Q3Colouring q, Vertex x, Vertex y) {
  CheckAntipodal(x, y);
  if (!Classify(q).good()) {
    throw std::invalid_argument("SelectGoodGeodesic called on a bad colouring");
  }
  return PickGood(q, x);
}

SelectorEntry SelectBadGeodesic(Q3Colouring q, Vertex x, Vertex y, FVariant variant) {
  CheckAntipodal(x, y);
  if (Classify(q).good()) {
    throw std::invalid_argument("SelectBadGeodesic called on a good colouring");
  }
  return PickBad(q, x, variant);
}

bool MonochromaticStar(Q3Colouring q, Vertex v) {
  const Colour c0 = Q3EdgeColour(q, v, 0);
  return Q3EdgeColour(q, v, 1) == c0 && Q3EdgeColour(q, v, 2) == c0;
}

LemmaReport VerifyTwoChangePairForcing() {
  LemmaReport report;
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    bool hit = false;
    bool violated = false;
    for (Vertex x = 0; x < 4; ++x) {
      bool all_two = true;
      for (const auto& order : kQ3Orders) all_two &= Q3Changes(q, x, order) == 2;
      if (!all_two) continue;
      hit = true;
      for (Vertex other = 0; other < 4; ++other) {
        if (other != x && Q3MinChanges(q, other) != 0) violated = true;
      }
    }
    report.hypothesis_hits += hit;
    if (violated) report.counterexamples.push_back(q);
  }
  return report;
}

LemmaReport VerifyMonochromaticStarGood() {
  LemmaReport report;
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    bool hit = false;
    for (Vertex v = 0; v < 8; ++v) hit |= MonochromaticStar(q, v);
    if (!hit) continue;
    ++report.hypothesis_hits;
    if (!Classify(q).good()) report.counterexamples.push_back(q);
  }
  return report;
}

LemmaReport VerifyBadColouringPatterns() {
  LemmaReport report;
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    if (Classify(q).good()) continue;
    ++report.hypothesis_hits;
    bool violated = false;
    for (Vertex v = 0; v < 8 && !violated; ++v) {
      bool red_first = false;
      bool blue_first = false;
      for (const auto& order : kQ3Orders) {
        if (Q3Changes(q, v, order) != 1) continue;
        const Vertex b = v ^ DirMask(order[0]) ^ DirMask(order[1]);
        const Colour first = Q3EdgeColour(q, v, order[0]);
        const Colour last = Q3EdgeColour(q, b, order[2]);
        red_first |= first == Colour::kRed && last == Colour::kBlue;
        blue_first |= first == Colour::kBlue && last == Colour::kRed;
      }
      violated = !(red_first && blue_first);
    }
    if (violated) report.counterexamples.push_back(q);
  }
  return report;
}

Q3Colouring ApplyIsometry(Q3Colouring q, const std::array<Direction, 3>& perm, Vertex flip) {
  auto map = [&](Vertex x) {
    Vertex y = 0;
    for (int i = 0; i < 3; ++i) {
      if (x & DirMask(i)) y |= DirMask(perm[i]);
    }
    return y ^ flip;
  };
  Q3Colouring out = 0;
  for (Direction d = 0; d < 3; ++d) {
    for (Vertex u = 0; u < 8; ++u) {
      if ((u & DirMask(d)) || Q3EdgeColour(q, u, d) == Colour::kRed) continue;
      const Direction nd = perm[d];
      const Vertex nu = map(u) & ~DirMask(nd);
      out |= static_cast<Q3Colouring>(1u << (4 * nd + Compress(nu, nd)));
    }
  }
  return out;
}

const Q3Table& Q3Table::Get() {
  static const Q3Table table;
  return table;
}

Q3Table::Q3Table() : entries_(kQ3Colourings) {
  for (int value = 0; value < kQ3Colourings; ++value) {
    const auto q = static_cast<Q3Colouring>(value);
    Q3Entry& entry = entries_[value];
    entry.good = Classify(q).good();
    for (Vertex x = 0; x < 8; ++x) {
      if (entry.good) {
        entry.selectors[0][x] = entry.selectors[1][x] = PickGood(q, x);
      } else {
        entry.selectors[0][x] = PickBad(q, x, FVariant::kF1);
        entry.selectors[1][x] = PickBad(q, x, FVariant::kF2);
      }
    }
  }
}

}  // namespace hypercol
