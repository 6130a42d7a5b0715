#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acgraph/group.hpp"

namespace acg {

struct Letter {
  std::uint32_t gen;
  int exp;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// Element of the free group of a given rank, always freely reduced.
class FreeWord {
 public:
  explicit FreeWord(std::uint32_t rank = 2) : rank_(rank) {}
  /// Reduces on construction. Throws InputError on bad generator or exponent.
  FreeWord(std::uint32_t rank, std::vector<Letter> letters);

  std::uint32_t rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  /// x^e expanded into |e| letters.
  static FreeWord power(std::uint32_t rank, std::uint32_t gen, int e);

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  bool operator==(const FreeWord&) const = default;

 private:
  std::uint32_t rank_;
  std::vector<Letter> letters_;
};

/// Free reduction; idempotent.
std::vector<Letter> reduce(std::span<const Letter> letters);
inline FreeWord reduce(const FreeWord& w) { return w; }

/// (u, v_n) = (x y x y^-1 x^-1 y^-1, x^n y^-(n+1)), rank 2, n >= 2.
std::pair<FreeWord, FreeWord> akbulut_kirby(int n);

/// Left-to-right product of generator images.
Element evaluate(const FreeWord& w, std::span<const Element> images, const FiniteGroup& g);

/// Exponent sum of each generator.
std::vector<std::int64_t> abelianized_vector(const FreeWord& w);

/// Parses "x*y*x*y^-1*x^-1*y^-1". Letters are x1, x2, ...; for rank 2 the
/// aliases x and y are accepted. '*' is optional, "^k" expands to |k|
/// letters, and "1" or "e" is the empty word.
FreeWord parse_word(std::string_view text, std::uint32_t rank);

/// Inverse of parse_word, using x/y aliases for rank 2.
std::string to_string(const FreeWord& w);

}  // namespace acg
