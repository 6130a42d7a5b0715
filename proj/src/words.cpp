#include "acgraph/words.hpp"

#include <cctype>
#include <charconv>

namespace acg {

std::vector<Letter> reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

FreeWord::FreeWord(std::uint32_t rank, std::vector<Letter> letters) : rank_(rank) {
  for (const Letter& l : letters) {
    if (l.gen >= rank) throw InputError("word letter exceeds rank");
    if (l.exp != 1 && l.exp != -1) throw InputError("word exponent must be +1 or -1");
  }
  letters_ = acg::reduce(letters);
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return FreeWord(rank_, std::move(out));
}

FreeWord FreeWord::power(std::uint32_t rank, std::uint32_t gen, int e) {
  std::vector<Letter> out(static_cast<std::size_t>(e < 0 ? -e : e), Letter{gen, e < 0 ? -1 : 1});
  return FreeWord(rank, std::move(out));
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_) throw InputError("word rank mismatch");
  std::vector<Letter> cat(a.letters_);
  cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(a.rank_, std::move(cat));
}

std::pair<FreeWord, FreeWord> akbulut_kirby(int n) {
  if (n < 2) throw InputError("Akbulut-Kirby index must be at least 2");
  constexpr std::uint32_t x = 0, y = 1;
  FreeWord u(2, {{x, 1}, {y, 1}, {x, 1}, {y, -1}, {x, -1}, {y, -1}});
  FreeWord v = FreeWord::power(2, x, n) * FreeWord::power(2, y, -(n + 1));
  return {u, v};
}

Element evaluate(const FreeWord& w, std::span<const Element> images, const FiniteGroup& g) {
  if (images.size() != w.rank()) throw InputError("image count does not match word rank");
  Element acc = FiniteGroup::identity;
  for (const Letter& l : w.letters()) {
    const Element x = images[l.gen];
    acc = g.mul(acc, l.exp > 0 ? x : g.inv(x));
  }
  return acc;
}

std::vector<std::int64_t> abelianized_vector(const FreeWord& w) {
  std::vector<std::int64_t> v(w.rank(), 0);
  for (const Letter& l : w.letters()) v[l.gen] += l.exp;
  return v;
}

FreeWord parse_word(std::string_view text, std::uint32_t rank) {
  std::vector<Letter> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw InputError("cannot parse word '" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&](int& value) {
    const char* first = text.data() + i;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{}) fail("expected integer");
    i += static_cast<std::size_t>(ptr - first);
  };
  skip_space();
  if (text.substr(i) == "1" || text.substr(i) == "e" || i == text.size()) return FreeWord(rank);
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    std::uint32_t gen = 0;
    const char c = text[i];
    if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      ++i;
      int idx = 0;
      read_int(idx);
      if (idx < 1 || static_cast<std::uint32_t>(idx) > rank) fail("generator index out of range");
      gen = static_cast<std::uint32_t>(idx - 1);
    } else if ((c == 'x' || c == 'y') && rank == 2) {
      ++i;
      gen = c == 'x' ? 0 : 1;
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    int e = 1;
    skip_space();
    if (i < text.size() && text[i] == '^') {
      ++i;
      read_int(e);
    }
    for (int r = 0; r < (e < 0 ? -e : e); ++r) out.push_back(Letter{gen, e < 0 ? -1 : 1});
    skip_space();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_space();
      if (i >= text.size()) fail("dangling '*'");
    }
  }
  return FreeWord(rank, std::move(out));
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += '*';
    if (w.rank() == 2)
      out += l.gen == 0 ? 'x' : 'y';
    else
      out += "x" + std::to_string(l.gen + 1);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace acg
