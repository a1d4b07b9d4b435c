#include <algorithm>
#include <array>
#include <stdexcept>

#include "raag/errors.hpp"
#include "raag/raag.hpp"
#include "raag/random.hpp"

namespace raag {

namespace {

// Letter code: 2 * vertex + (1 if inverse).
using Code = std::uint32_t;

constexpr Code inverse(Code c) { return c ^ 1U; }

class WordBuilder {
 public:
  WordBuilder(const SimplicialGraph& g, Rng& rng) : g_(g), rng_(rng) {}

  Code random_letter() {
    return static_cast<Code>(2 * uniform_below(rng_, g_.vertex_count()) + uniform_below(rng_, 2));
  }

  // Appends conjugated commutators and x x^-1 insertions until `need`
  // more letters have been added (need is even).
  void fill(std::vector<Code>& word, std::size_t need) {
    std::vector<std::pair<std::size_t, std::array<Code, 2>>> insertions;
    while (need >= 2) {
      if (g_.edge_count() > 0 && need >= 4 && bernoulli(rng_, 0.75)) {
        const auto max_conj = std::min<std::size_t>(3, (need - 4) / 2);
        const auto conj_len = uniform_below(rng_, max_conj + 1);
        std::vector<Code> conj;
        while (conj.size() < conj_len) {
          const auto c = random_letter();
          if (conj.empty() || conj.back() != inverse(c)) conj.push_back(c);
        }
        const auto& e = g_.edges()[uniform_below(rng_, g_.edge_count())];
        Code a = static_cast<Code>(2 * e.u);
        Code b = static_cast<Code>(2 * e.v);
        if (uniform_below(rng_, 2)) std::swap(a, b);
        std::array<Code, 4> relator{a, b, inverse(a), inverse(b)};
        if (uniform_below(rng_, 2)) relator = {b, a, inverse(b), inverse(a)};  // [a,b]^-1
        word.insert(word.end(), conj.begin(), conj.end());
        word.insert(word.end(), relator.begin(), relator.end());
        for (auto it = conj.rbegin(); it != conj.rend(); ++it) word.push_back(inverse(*it));
        need -= 4 + 2 * conj_len;
      } else {
        const auto x = random_letter();
        insertions.push_back({uniform_below(rng_, word.size() + 1), {x, inverse(x)}});
        need -= 2;
      }
    }
    if (insertions.empty()) return;
    std::stable_sort(insertions.begin(), insertions.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Code> merged;
    merged.reserve(word.size() + 2 * insertions.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i <= word.size(); ++i) {
      while (next < insertions.size() && insertions[next].first == i) {
        merged.push_back(insertions[next].second[0]);
        merged.push_back(insertions[next].second[1]);
        ++next;
      }
      if (i < word.size()) merged.push_back(word[i]);
    }
    word = std::move(merged);
  }

  // 4|w| attempted swaps of neighbouring letters that commute in the group.
  void shuffle_commuting(std::vector<Code>& word) {
    if (word.size() < 2) return;
    const auto attempts = 4 * word.size();
    for (std::size_t k = 0; k < attempts; ++k) {
      const auto i = uniform_below(rng_, word.size() - 1);
      const auto u = word[i] / 2;
      const auto v = word[i + 1] / 2;
      if (u == v || g_.adjacent(u, v)) std::swap(word[i], word[i + 1]);
    }
  }

  static std::vector<Code> freely_reduced(const std::vector<Code>& word) {
    std::vector<Code> out;
    out.reserve(word.size());
    for (auto c : word) {
      if (!out.empty() && out.back() == inverse(c)) {
        out.pop_back();
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  Word to_word(const std::vector<Code>& codes) const {
    Word w;
    w.letters.reserve(codes.size());
    for (auto c : codes) w.letters.push_back({g_.label(c / 2), (c & 1U) ? -1 : 1});
    return w;
  }

 private:
  const SimplicialGraph& g_;
  Rng& rng_;
};

std::vector<Code> trivial_codes(const SimplicialGraph& g, std::size_t target_length, Rng& rng) {
  WordBuilder builder(g, rng);
  const auto acceptable = (3 * target_length + 3) / 4;
  std::vector<Code> word;
  std::vector<Code> last_full;
  for (int attempt = 0; attempt < 8; ++attempt) {
    builder.fill(word, target_length - word.size());
    builder.shuffle_commuting(word);
    last_full = word;
    word = WordBuilder::freely_reduced(word);
    if (word.size() >= acceptable) return word;
  }
  // Free reduction keeps collapsing the word (e.g. no edges to build
  // commutators from); fall back to the unreduced shuffle.
  return last_full;
}

}  // namespace

Word sample_trivial_word(const Raag& group, std::size_t target_length, std::uint64_t seed) {
  const auto& g = group.graph();
  if (target_length == 0 || target_length % 2 != 0) {
    throw DomainError("trivial word length must be even and positive");
  }
  if (g.vertex_count() == 0) throw DomainError("cannot sample words over an empty graph");
  Rng rng(seed);
  return WordBuilder(g, rng).to_word(trivial_codes(g, target_length, rng));
}

Word sample_nontrivial_word(const Raag& group, std::size_t target_length, std::uint64_t seed) {
  const auto& g = group.graph();
  if (target_length == 0) throw DomainError("word length must be positive");
  if (g.vertex_count() == 0) throw DomainError("cannot sample words over an empty graph");
  std::size_t base = (target_length - 1) & ~std::size_t{1};
  if (base == 0 && target_length >= 2) base = 2;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    WordBuilder builder(g, rng);
    auto codes = base ? trivial_codes(g, base, rng) : std::vector<Code>{};
    const auto extra = builder.random_letter();
    codes.insert(codes.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, codes.size() + 1)), extra);
    builder.shuffle_commuting(codes);
    auto w = builder.to_word(WordBuilder::freely_reduced(codes));
    if (!is_trivial(group, w)) return w;
  }
  throw std::logic_error("failed to sample a nontrivial word");
}

}  // namespace raag
