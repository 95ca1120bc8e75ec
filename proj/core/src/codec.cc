#include "hypercol/codec.h"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

namespace hypercol {

std::string Serialize(const EdgeColouring& c) {
  std::string out = "n=" + std::to_string(c.dimension()) + "\n";
  out.reserve(out.size() + c.edge_count() + 1);
  for (std::size_t e = 0; e < c.edge_count(); ++e) {
    out.push_back(c.colour_at(e) == Colour::kBlue ? '1' : '0');
  }
  out.push_back('\n');
  return out;
}

EdgeColouring Parse(std::string_view text) {
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) throw ParseError("missing header line");
  const std::string_view header = text.substr(0, eol);
  if (!header.starts_with("n=") || header.size() == 2) {
    throw ParseError("header must be 'n=<decimal>'");
  }
  const std::string_view digits = header.substr(2);
  int n = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.front() == '+' || digits.front() == '-') {
    throw ParseError("header must be 'n=<decimal>'");
  }
  if (n < 1 || n > kMaxDimension) {
    throw ParseError("dimension " + std::string(digits) + " outside [1, " +
                     std::to_string(kMaxDimension) + "]");
  }

  std::string_view body = text.substr(eol + 1);
  if (body.ends_with('\n')) body.remove_suffix(1);
  const std::size_t expected = EdgeCount(n);
  if (body.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) +
                     " edge characters, got " + std::to_string(body.size()));
  }
  std::vector<std::uint64_t> words((expected + 63) / 64, 0);
  for (std::size_t e = 0; e < expected; ++e) {
    const char ch = body[e];
    if (ch == '1') {
      words[e >> 6] |= std::uint64_t{1} << (e & 63);
    } else if (ch != '0') {
      throw ParseError("invalid character at edge " + std::to_string(e));
    }
  }
  return EdgeColouring(n, std::move(words));
}

EdgeColouring ReadColouringFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return Parse(ss.str());
}

void WriteColouringFile(const std::filesystem::path& path, const EdgeColouring& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << Serialize(c);
}

EdgeColouring RandomColouring(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension outside [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  std::mt19937_64 rng(seed);
  const std::size_t edges = EdgeCount(n);
  std::vector<std::uint64_t> words((edges + 63) / 64);
  for (auto& w : words) w = rng();
  if (const std::size_t tail = edges % 64; tail != 0) {
    words.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return EdgeColouring(n, std::move(words));
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined state.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hypercol
