#include "raag/word.hpp"

#include <algorithm>

#include "raag/errors.hpp"
#include "raag/graph_io.hpp"

namespace raag {

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().generator == l.generator &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::map<std::string, std::int64_t> exponent_sums(const Word& w) {
  std::map<std::string, std::int64_t> sums;
  for (const auto& l : w.letters) sums[l.generator] += l.sign;
  std::erase_if(sums, [](const auto& kv) { return kv.second == 0; });
  return sums;
}

Word parse_word(std::string_view text) {
  Word w;
  for (auto& token : split_tokens(text)) {
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      if (token.front() == '#') throw ParseError("bad generator token '" + token + "'");
      w.letters.push_back({std::move(token), 1});
      continue;
    }
    if (caret == 0 || token.substr(caret) != "^-1" || token.front() == '#') {
      throw ParseError("bad word token '" + token + "'");
    }
    w.letters.push_back({token.substr(0, caret), -1});
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w.letters[i].generator;
    if (w.letters[i].sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace raag
