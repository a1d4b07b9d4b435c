#include <algorithm>

#include "raag/errors.hpp"
#include "raag/graph.hpp"

namespace raag {

namespace {

constexpr auto kUnassigned = static_cast<std::size_t>(-1);

class HomomorphismSearcher {
 public:
  HomomorphismSearcher(const SimplicialGraph& source, const SimplicialGraph& target,
                       std::uint64_t budget)
      : source_(source), target_(target), budget_(budget), image_(source.vertex_count(), kUnassigned) {
    // Only neighbours earlier in declaration order constrain a new vertex.
    earlier_.resize(source.vertex_count());
    for (std::size_t v = 0; v < source.vertex_count(); ++v) {
      for (auto u : source.neighbors(v)) {
        if (u < v) earlier_[v].push_back(u);
      }
    }
  }

  HomomorphismSearch run() {
    const auto status = extend(0);
    HomomorphismSearch out{status, std::nullopt, nodes_};
    if (status == SearchStatus::found) out.map.emplace(source_, target_, image_);
    return out;
  }

 private:
  SearchStatus extend(std::size_t v) {
    if (v == source_.vertex_count()) return SearchStatus::found;
    for (std::size_t t = 0; t < target_.vertex_count(); ++t) {
      if (nodes_ >= budget_) return SearchStatus::budget_exhausted;
      ++nodes_;
      const bool fits = std::all_of(earlier_[v].begin(), earlier_[v].end(), [&](std::size_t u) {
        return image_[u] != t && target_.adjacent(image_[u], t);
      });
      if (!fits) continue;
      image_[v] = t;
      const auto status = extend(v + 1);
      if (status != SearchStatus::not_found) return status;
    }
    image_[v] = kUnassigned;
    return SearchStatus::not_found;
  }

  const SimplicialGraph& source_;
  const SimplicialGraph& target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> image_;
  std::vector<std::vector<std::size_t>> earlier_;
};

class InducedIsomorphismSearcher {
 public:
  InducedIsomorphismSearcher(const SimplicialGraph& g, const VertexSubset& s1,
                             const VertexSubset& s2, std::uint64_t budget)
      : g_(g), from_(s1.indices()), to_(s2.indices()), budget_(budget),
        image_(from_.size(), kUnassigned), used_(to_.size(), false) {}

  IsomorphismSearch run() {
    IsomorphismSearch out{SearchStatus::not_found, {}, 0};
    if (from_.size() == to_.size()) out.status = extend(0);
    out.nodes = nodes_;
    if (out.status == SearchStatus::found) {
      for (std::size_t k = 0; k < from_.size(); ++k) {
        out.bijection.emplace_back(g_.label(from_[k]), g_.label(to_[image_[k]]));
      }
    }
    return out;
  }

 private:
  SearchStatus extend(std::size_t k) {
    if (k == from_.size()) return SearchStatus::found;
    for (std::size_t c = 0; c < to_.size(); ++c) {
      if (used_[c]) continue;
      if (nodes_ >= budget_) return SearchStatus::budget_exhausted;
      ++nodes_;
      bool fits = true;
      for (std::size_t j = 0; j < k && fits; ++j) {
        fits = g_.adjacent(from_[j], from_[k]) == g_.adjacent(to_[image_[j]], to_[c]);
      }
      if (!fits) continue;
      image_[k] = c;
      used_[c] = true;
      const auto status = extend(k + 1);
      if (status != SearchStatus::not_found) return status;
      used_[c] = false;
    }
    image_[k] = kUnassigned;
    return SearchStatus::not_found;
  }

  const SimplicialGraph& g_;
  const std::vector<std::size_t>& from_;
  const std::vector<std::size_t>& to_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

HomomorphismSearch find_graph_homomorphism(const SimplicialGraph& source,
                                           const SimplicialGraph& target, std::uint64_t budget) {
  if (budget == 0) throw DomainError("search budget must be positive");
  return HomomorphismSearcher(source, target, budget).run();
}

IsomorphismSearch find_induced_subgraph_isomorphism(const SimplicialGraph& g,
                                                    const VertexSubset& s1,
                                                    const VertexSubset& s2, std::uint64_t budget) {
  if (budget == 0) throw DomainError("search budget must be positive");
  if (!(s1.parent() == g) || !(s2.parent() == g)) {
    throw DomainError("subsets do not belong to this graph");
  }
  return InducedIsomorphismSearcher(g, s1, s2, budget).run();
}

}  // namespace raag
