#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace raag {

/// A generator or its inverse.
struct Letter {
  std::string generator;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Finite sequence of letters; the empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Deletes adjacent v^e v^-e pairs until none remain.
Word free_reduce(const Word& w);
Word invert(const Word& w);
/// Plain juxtaposition, no reduction.
Word concat(const Word& a, const Word& b);

/// Signed exponent sum per generator (the image in the abelianization);
/// generators with sum zero are omitted.
std::map<std::string, std::int64_t> exponent_sums(const Word& w);

/// Word text: whitespace-separated tokens, `v` or `v^-1`. Anything else
/// (`v^2`, `v^1`, a bare `^-1`) is a ParseError.
Word parse_word(std::string_view text);
/// Tokens joined by single spaces, no trailing newline.
std::string format_word(const Word& w);

}  // namespace raag
