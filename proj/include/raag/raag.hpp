#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// The right-angled Artin group A(G): generators are the vertices of G and
/// the only relations are [u, v] = 1 for every edge {u, v}.
class Raag {
 public:
  explicit Raag(SimplicialGraph graph) : graph_(std::move(graph)) {}
  const SimplicialGraph& graph() const { return graph_; }

 private:
  SimplicialGraph graph_;
};

/// Subgroup generated by a subset of the standard generators. It is
/// presented by the induced subgraph on that subset.
class SpecialSubgroup {
 public:
  SpecialSubgroup(Raag parent, VertexSubset generators);

  const Raag& parent() const { return parent_; }
  const VertexSubset& generators() const { return generators_; }
  Raag presentation() const { return Raag(induced_subgraph(parent_.graph(), generators_)); }

 private:
  Raag parent_;
  VertexSubset generators_;
};

/// Word-problem state: one stack per vertex holding +1 / -1 for that
/// vertex's own letters and 0 as a marker left by a non-commuting letter.
class Piling {
 public:
  explicit Piling(std::size_t vertex_count) : stacks_(vertex_count) {}

  /// Pushes v^sign, or cancels it against the top of v's stack when that is
  /// v^-sign and every non-neighbour of v has a marker on top.
  void push(const SimplicialGraph& g, std::size_t vertex, int sign);

  bool empty() const { return entries_ == 0; }
  std::span<const std::int8_t> stack(std::size_t vertex) const { return stacks_[vertex]; }

  friend bool operator==(const Piling&, const Piling&) = default;

 private:
  std::vector<std::vector<std::int8_t>> stacks_;
  std::size_t entries_ = 0;
};

/// Value-returning form of Piling::push. Throws DomainError for a generator
/// that is not a vertex of g.
Piling push_letter(Piling p, const Letter& l, const SimplicialGraph& g);

/// Linear in |w| for a fixed graph.
bool is_trivial(const Raag& group, const Word& w);
bool are_equal(const Raag& group, const Word& a, const Word& b);
/// True if every letter of w is one of the subgroup's generators.
bool is_over_generators(const SpecialSubgroup& subgroup, const Word& w);

/// Brute-force check: breadth-first search over rewrites by commuting swaps
/// and inverse-pair deletions. States are identified up to commuting swaps
/// (each class is stored by its lexicographically least spelling). Throws
/// OracleBoundExceeded if the freely reduced word is longer than bound.
bool oracle_is_trivial(const Raag& group, const Word& w, std::size_t bound = 14);

/// Trivial word of length close to target_length (even, positive): products
/// of conjugated edge commutators and x x^-1 insertions, shuffled by legal
/// commuting swaps and freely reduced. Deterministic in seed. The mixing is
/// heuristic; it does not hide triviality from an observer who knows G.
Word sample_trivial_word(const Raag& group, std::size_t target_length, std::uint64_t seed);

/// A trivial sample times one random generator, reshuffled, checked with
/// is_trivial and retried (up to 16 times) if it came out trivial.
Word sample_nontrivial_word(const Raag& group, std::size_t target_length, std::uint64_t seed);

/// Relaxed check: every source edge maps to a target edge or collapses to a
/// single vertex. Exactly the condition for the generator assignment to
/// extend to a group homomorphism A(source) -> A(target).
bool verify_generator_homomorphism(const VertexMap& f);

}  // namespace raag
