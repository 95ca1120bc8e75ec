// Vertices, edges, colourings and geodesics of the hypercube Q_n.
//
// Vertex labelling: a vertex is an integer in [0, 2^n); bit d is coordinate d
// (bit 0 least significant). Flipping coordinate d is `v ^ (1u << d)`.
//
// Edge numbering: the edge in direction d through u is stored under its
// canonical endpoint (the endpoint with bit d clear) at
//   edge_index(n, u, d) = d * 2^(n-1) + compress(u, d)
// where compress drops bit d from u.

#ifndef HYPERCOL_HYPERCUBE_H_
#define HYPERCOL_HYPERCUBE_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hypercol {

using Vertex = std::uint32_t;
using Direction = int;

// Largest dimension accepted for stored colourings.
inline constexpr int kMaxDimension = 24;

enum class Colour : std::uint8_t { kRed = 0, kBlue = 1 };
enum class Parity : std::uint8_t { kEven = 0, kOdd = 1 };

constexpr Colour Opposite(Colour c) {
  return c == Colour::kRed ? Colour::kBlue : Colour::kRed;
}

constexpr Vertex DirMask(Direction d) { return Vertex{1} << d; }
constexpr Vertex FullMask(int n) { return n >= 32 ? ~Vertex{0} : (Vertex{1} << n) - 1; }

constexpr Vertex Antipode(Vertex v, int n) { return v ^ FullMask(n); }

constexpr Parity ParityOf(Vertex v) {
  return (std::popcount(v) & 1) ? Parity::kOdd : Parity::kEven;
}

constexpr int Distance(Vertex a, Vertex b) { return std::popcount(a ^ b); }

// Removes bit d from u: lower bits stay, higher bits shift down one place.
constexpr Vertex Compress(Vertex u, Direction d) {
  const Vertex low = u & (DirMask(d) - 1);
  return low | ((u >> (d + 1)) << d);
}

// Throws std::invalid_argument when d >= n or bit d of u is set.
std::size_t EdgeIndex(int n, Vertex u, Direction d);

// Number of edges of Q_n.
constexpr std::size_t EdgeCount(int n) {
  return n == 0 ? 0 : static_cast<std::size_t>(n) << (n - 1);
}

struct VertexInfo {
  Vertex antipode;
  Parity parity;
};

// Range-checked antipode and parity.
VertexInfo DescribeVertex(Vertex v, int n);

// An immutable 2-colouring of the edges of Q_n, bit-packed in edge_index
// order (bit set = Blue).
class EdgeColouring {
 public:
  // `words` must hold exactly ceil(EdgeCount(n) / 64) words with all bits past
  // EdgeCount(n) clear.
  EdgeColouring(int n, std::vector<std::uint64_t> words);

  static EdgeColouring Uniform(int n, Colour c);
  static EdgeColouring FromFunction(
      int n, const std::function<Colour(Vertex, Direction)>& colour_of);

  int dimension() const { return n_; }
  std::size_t edge_count() const { return EdgeCount(n_); }

  Colour colour_at(std::size_t edge) const {
    return static_cast<Colour>((words_[edge >> 6] >> (edge & 63)) & 1);
  }

  // Colour of the edge leaving u in direction d, either endpoint accepted.
  // Unchecked; callers guarantee u < 2^n and d < n.
  Colour colour(Vertex u, Direction d) const {
    const Vertex canon = u & ~DirMask(d);
    return colour_at((static_cast<std::size_t>(d) << (n_ - 1)) |
                     Compress(canon, d));
  }

  // Throws std::invalid_argument unless u and v are adjacent in Q_n.
  Colour edge_colour(Vertex u, Vertex v) const;

  // Copy with a single edge colour flipped.
  EdgeColouring WithFlipped(std::size_t edge) const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// A path from `start` that flips the listed directions in order. The
// directions must be pairwise distinct.
struct Geodesic {
  Vertex start = 0;
  std::vector<Direction> dirs;

  Vertex end() const;
  std::vector<Vertex> vertices() const;
  Geodesic reversed() const;
  bool valid(int n) const;

  friend bool operator==(const Geodesic&, const Geodesic&) = default;
};

// All popcount(v ^ w)! geodesics from v to w in lexicographic order of their
// direction sequences. v == w yields the single empty geodesic.
std::vector<Geodesic> EnumerateGeodesics(Vertex v, Vertex w);

// Number of consecutive edge pairs along g whose colours differ.
int ColourChanges(const EdgeColouring& c, const Geodesic& g);

// G(v, w): the 3-dimensional subcube spanned by the geodesics between two
// vertices at distance 3. `anchor` has all three subcube bits clear.
struct Subcube {
  Vertex anchor = 0;
  std::array<Direction, 3> dirs{};  // ascending

  Vertex mask() const { return DirMask(dirs[0]) | DirMask(dirs[1]) | DirMask(dirs[2]); }

  // Maps a local Q3 vertex (bit i = coordinate dirs[i]) into Q_n.
  Vertex to_global(Vertex local) const;
  // Inverse of to_global for vertices inside the subcube.
  Vertex to_local(Vertex global) const;

  friend bool operator==(const Subcube&, const Subcube&) = default;
};

// Throws std::invalid_argument unless popcount(v ^ w) == 3.
Subcube SubcubeOfPair(Vertex v, Vertex w);

}  // namespace hypercol

#endif  // HYPERCOL_HYPERCUBE_H_
