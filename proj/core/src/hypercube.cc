#include "hypercol/hypercube.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace hypercol {
namespace {

std::size_t WordCount(int n) { return (EdgeCount(n) + 63) / 64; }

void CheckDimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "], got " +
                                std::to_string(n));
  }
}

}  // namespace

std::size_t EdgeIndex(int n, Vertex u, Direction d) {
  if (d < 0 || d >= n) {
    throw std::invalid_argument("direction " + std::to_string(d) +
                                " out of range for n=" + std::to_string(n));
  }
  if (u > FullMask(n)) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " out of range for n=" + std::to_string(n));
  }
  if (u & DirMask(d)) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " is not the canonical endpoint in direction " +
                                std::to_string(d));
  }
  return (static_cast<std::size_t>(d) << (n - 1)) + Compress(u, d);
}

VertexInfo DescribeVertex(Vertex v, int n) {
  if (n < 0 || n > 31 || v > FullMask(n)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
  }
  return {Antipode(v, n), ParityOf(v)};
}

EdgeColouring::EdgeColouring(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  CheckDimension(n);
  if (words_.size() != WordCount(n)) {
    throw std::invalid_argument("colouring storage has wrong length");
  }
  const std::size_t tail = EdgeCount(n) % 64;
  if (tail != 0 && (words_.back() >> tail) != 0) {
    throw std::invalid_argument("colouring storage has bits past the last edge");
  }
}

EdgeColouring EdgeColouring::Uniform(int n, Colour c) {
  return FromFunction(n, [c](Vertex, Direction) { return c; });
}

EdgeColouring EdgeColouring::FromFunction(
    int n, const std::function<Colour(Vertex, Direction)>& colour_of) {
  CheckDimension(n);
  std::vector<std::uint64_t> words(WordCount(n), 0);
  for (Direction d = 0; d < n; ++d) {
    for (Vertex u = 0; u <= FullMask(n); ++u) {
      if (u & DirMask(d)) continue;
      if (colour_of(u, d) == Colour::kBlue) {
        const std::size_t e = EdgeIndex(n, u, d);
        words[e >> 6] |= std::uint64_t{1} << (e & 63);
      }
    }
  }
  return EdgeColouring(n, std::move(words));
}

Colour EdgeColouring::edge_colour(Vertex u, Vertex v) const {
  const Vertex diff = u ^ v;
  if (u > FullMask(n_) || v > FullMask(n_) || std::popcount(diff) != 1) {
    throw std::invalid_argument("vertices " + std::to_string(u) + " and " +
                                std::to_string(v) + " are not adjacent");
  }
  return colour(u, std::countr_zero(diff));
}

EdgeColouring EdgeColouring::WithFlipped(std::size_t edge) const {
  if (edge >= edge_count()) throw std::out_of_range("edge index out of range");
  std::vector<std::uint64_t> words = words_;
  words[edge >> 6] ^= std::uint64_t{1} << (edge & 63);
  return EdgeColouring(n_, std::move(words));
}

Vertex Geodesic::end() const {
  Vertex v = start;
  for (Direction d : dirs) v ^= DirMask(d);
  return v;
}

std::vector<Vertex> Geodesic::vertices() const {
  std::vector<Vertex> out;
  out.reserve(dirs.size() + 1);
  Vertex v = start;
  out.push_back(v);
  for (Direction d : dirs) {
    v ^= DirMask(d);
    out.push_back(v);
  }
  return out;
}

Geodesic Geodesic::reversed() const {
  return {end(), std::vector<Direction>(dirs.rbegin(), dirs.rend())};
}

bool Geodesic::valid(int n) const {
  if (start > FullMask(n)) return false;
  Vertex seen = 0;
  for (Direction d : dirs) {
    if (d < 0 || d >= n || (seen & DirMask(d))) return false;
    seen |= DirMask(d);
  }
  return true;
}

std::vector<Geodesic> EnumerateGeodesics(Vertex v, Vertex w) {
  std::vector<Direction> dirs;
  for (Vertex diff = v ^ w; diff != 0; diff &= diff - 1) {
    dirs.push_back(std::countr_zero(diff));
  }
  std::vector<Geodesic> out;
  do {
    out.push_back({v, dirs});
  } while (std::next_permutation(dirs.begin(), dirs.end()));
  return out;
}

int ColourChanges(const EdgeColouring& c, const Geodesic& g) {
  if (g.dirs.size() < 2) return 0;
  int changes = 0;
  Vertex v = g.start;
  Colour prev = c.colour(v, g.dirs[0]);
  v ^= DirMask(g.dirs[0]);
  for (std::size_t i = 1; i < g.dirs.size(); ++i) {
    const Colour cur = c.colour(v, g.dirs[i]);
    changes += cur != prev;
    prev = cur;
    v ^= DirMask(g.dirs[i]);
  }
  return changes;
}

Vertex Subcube::to_global(Vertex local) const {
  Vertex v = anchor;
  for (int i = 0; i < 3; ++i) {
    if (local & DirMask(i)) v |= DirMask(dirs[i]);
  }
  return v;
}

Vertex Subcube::to_local(Vertex global) const {
  Vertex local = 0;
  for (int i = 0; i < 3; ++i) {
    if (global & DirMask(dirs[i])) local |= DirMask(i);
  }
  return local;
}

Subcube SubcubeOfPair(Vertex v, Vertex w) {
  const Vertex diff = v ^ w;
  if (std::popcount(diff) != 3) {
    throw std::invalid_argument("vertices " + std::to_string(v) + " and " +
                                std::to_string(w) + " are at distance " +
                                std::to_string(std::popcount(diff)) +
                                ", expected 3");
  }
  Subcube s;
  s.anchor = v & ~diff;
  Vertex rest = diff;
  for (int i = 0; i < 3; ++i) {
    s.dirs[i] = std::countr_zero(rest);
    rest &= rest - 1;
  }
  return s;
}

}  // namespace hypercol
