#include <deque>
#include <set>

#include "raag/errors.hpp"
#include "raag/raag.hpp"

namespace raag {

namespace {

// Letter code: 2 * vertex + (1 if inverse).
using Code = std::uint16_t;
using State = std::vector<Code>;

class CommutationClasses {
 public:
  explicit CommutationClasses(const SimplicialGraph& g) : g_(g) {}

  bool commute(Code a, Code b) const { return g_.adjacent(a / 2, b / 2); }

  // Lexicographically least word obtainable by commuting swaps: repeatedly
  // take the smallest letter that every remaining earlier letter commutes with.
  State canonical(const State& w) const {
    State rest = w;
    State out;
    out.reserve(w.size());
    while (!rest.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        bool movable = true;
        for (std::size_t j = 0; j < i && movable; ++j) movable = commute(rest[j], rest[i]);
        if (movable && (i == 0 || rest[i] < rest[best])) best = i;
      }
      out.push_back(rest[best]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
  }

  // Every word reachable by bringing an inverse pair together through
  // commuting swaps and deleting it.
  template <typename F>
  void for_each_deletion(const State& w, F&& visit) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j] == (w[i] ^ 1)) {
          State next;
          next.reserve(w.size() - 2);
          for (std::size_t k = 0; k < w.size(); ++k) {
            if (k != i && k != j) next.push_back(w[k]);
          }
          visit(std::move(next));
        }
        if (!commute(w[i], w[j])) break;
      }
    }
  }

 private:
  const SimplicialGraph& g_;
};

}  // namespace

bool oracle_is_trivial(const Raag& group, const Word& w, std::size_t bound) {
  const auto reduced = free_reduce(w);
  if (reduced.size() > bound) {
    throw OracleBoundExceeded("word of reduced length " + std::to_string(reduced.size()) +
                              " exceeds oracle bound " + std::to_string(bound));
  }
  const auto& g = group.graph();
  State start;
  for (const auto& l : reduced.letters) {
    start.push_back(static_cast<Code>(2 * g.require_index(l.generator) + (l.sign < 0 ? 1 : 0)));
  }
  const CommutationClasses classes(g);
  std::set<State> seen{classes.canonical(start)};
  std::deque<State> queue{*seen.begin()};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    if (current.empty()) return true;
    classes.for_each_deletion(current, [&](State next) {
      auto key = classes.canonical(next);
      if (seen.insert(key).second) queue.push_back(std::move(key));
    });
  }
  return false;
}

}  // namespace raag
