// Text format for colourings, plus seeded random generation.
//
//   n=<decimal>
//   <n * 2^(n-1) characters from {0,1} in edge_index order>
//
// '0' is Red and '1' is Blue. The trailing newline is optional.

#ifndef HYPERCOL_CODEC_H_
#define HYPERCOL_CODEC_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypercol/hypercube.h"

namespace hypercol {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Serialize(const EdgeColouring& c);

// Throws ParseError on a malformed header, a dimension outside
// [1, kMaxDimension], a bit string of the wrong length, or characters other
// than '0' and '1'.
EdgeColouring Parse(std::string_view text);

EdgeColouring ReadColouringFile(const std::filesystem::path& path);
void WriteColouringFile(const std::filesystem::path& path, const EdgeColouring& c);

// Each edge bit independent and uniform; deterministic in (n, seed).
EdgeColouring RandomColouring(int n, std::uint64_t seed);

// Independent stream seed for task `index` of a run seeded with `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace hypercol

#endif  // HYPERCOL_CODEC_H_
