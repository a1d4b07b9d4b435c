#include <algorithm>

#include "raag/errors.hpp"
#include "raag/raag.hpp"

namespace raag {

SpecialSubgroup::SpecialSubgroup(Raag parent, VertexSubset generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  if (!(generators_.parent() == parent_.graph())) {
    throw DomainError("special subgroup generators must come from the parent graph");
  }
}

void Piling::push(const SimplicialGraph& g, std::size_t vertex, int sign) {
  const auto mark = static_cast<std::int8_t>(sign > 0 ? 1 : -1);
  auto& own = stacks_[vertex];
  const auto blockers = g.non_neighbors(vertex);
  const bool cancels = !own.empty() && own.back() == -mark &&
                       std::all_of(blockers.begin(), blockers.end(), [&](std::size_t u) {
                         return !stacks_[u].empty() && stacks_[u].back() == 0;
                       });
  if (cancels) {
    own.pop_back();
    for (auto u : blockers) stacks_[u].pop_back();
    entries_ -= 1 + blockers.size();
  } else {
    own.push_back(mark);
    for (auto u : blockers) stacks_[u].push_back(0);
    entries_ += 1 + blockers.size();
  }
}

Piling push_letter(Piling p, const Letter& l, const SimplicialGraph& g) {
  p.push(g, g.require_index(l.generator), l.sign);
  return p;
}

bool is_trivial(const Raag& group, const Word& w) {
  const auto& g = group.graph();
  Piling piling(g.vertex_count());
  for (const auto& l : w.letters) piling.push(g, g.require_index(l.generator), l.sign);
  return piling.empty();
}

bool are_equal(const Raag& group, const Word& a, const Word& b) {
  return is_trivial(group, concat(a, invert(b)));
}

bool is_over_generators(const SpecialSubgroup& subgroup, const Word& w) {
  const auto& g = subgroup.parent().graph();
  return std::all_of(w.letters.begin(), w.letters.end(), [&](const Letter& l) {
    auto i = g.index_of(l.generator);
    return i && subgroup.generators().contains(*i);
  });
}

bool verify_generator_homomorphism(const VertexMap& f) {
  return std::all_of(f.source().edges().begin(), f.source().edges().end(), [&](const Edge& e) {
    const auto a = f(e.u);
    const auto b = f(e.v);
    return a == b || f.target().adjacent(a, b);
  });
}

}  // namespace raag
