#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Unvalidated vertex/edge lists, as read from a graph file. A
/// SimplicialGraph is only ever built from a description that validates.
struct GraphDescription {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

enum class ViolationKind { loop, dangling_endpoint, duplicate_edge, duplicate_vertex, bad_label };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(const Violation& v);

/// Lists every simplicial-graph invariant the description breaks; empty
/// means valid. Labels must be non-empty, free of whitespace and of `^`
/// and must not start with `#` (the word and graph formats rely on it).
std::vector<Violation> validate_graph(const GraphDescription& description);

struct Edge {
  std::size_t u;
  std::size_t v;
};

/// Finite loop-free undirected graph. Vertices keep their declaration
/// order, which is the order every search and serializer iterates in.
/// Copies are cheap: the immutable body is shared.
class SimplicialGraph {
 public:
  SimplicialGraph();
  /// Throws DomainError listing the violations if the description is invalid.
  explicit SimplicialGraph(const GraphDescription& description);
  /// Index-based construction for generators; endpoints must be distinct
  /// and in range, duplicate edges are dropped.
  SimplicialGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;
  const std::vector<std::string>& vertices() const;
  const std::string& label(std::size_t index) const;
  /// Edges in insertion order, each stored with u < v.
  const std::vector<Edge>& edges() const;

  std::optional<std::size_t> index_of(std::string_view label) const;
  /// Throws DomainError for an unknown label.
  std::size_t require_index(std::string_view label) const;
  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  bool adjacent(std::size_t a, std::size_t b) const;
  bool adjacent(std::string_view a, std::string_view b) const;
  std::span<const std::size_t> neighbors(std::size_t v) const;
  /// Vertices u != v with no edge to v.
  std::span<const std::size_t> non_neighbors(std::size_t v) const;

  GraphDescription description() const;
  bool has_triangle() const;

  /// Same vertex sequence and same edge set.
  friend bool operator==(const SimplicialGraph& a, const SimplicialGraph& b);

 private:
  struct Body;
  std::shared_ptr<const Body> body_;
};

/// Subset of a graph's vertices, in the order given at construction.
class VertexSubset {
 public:
  /// Throws DomainError on a member outside the parent or a repeated member.
  VertexSubset(SimplicialGraph parent, const std::vector<std::string>& members);

  const SimplicialGraph& parent() const { return parent_; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  std::vector<std::string> labels() const;
  std::size_t size() const { return indices_.size(); }
  bool contains(std::size_t vertex) const;

 private:
  SimplicialGraph parent_;
  std::vector<std::size_t> indices_;
};

/// Label pairs `source -> target`, the wire form of maps and bijections.
using LabelAssignment = std::vector<std::pair<std::string, std::string>>;

/// Total function from source vertices to target vertices. Whether it
/// preserves edges is what the verifiers decide, not a type invariant.
class VertexMap {
 public:
  /// image[i] is the target index of source vertex i.
  VertexMap(SimplicialGraph source, SimplicialGraph target, std::vector<std::size_t> image);

  /// Throws DomainError unless every source vertex is assigned exactly once
  /// to a vertex of the target.
  static VertexMap from_labels(SimplicialGraph source, SimplicialGraph target,
                               const LabelAssignment& assignment);

  const SimplicialGraph& source() const { return source_; }
  const SimplicialGraph& target() const { return target_; }
  std::size_t operator()(std::size_t source_vertex) const { return image_[source_vertex]; }
  const std::vector<std::size_t>& image() const { return image_; }
  const std::string& image_of(std::string_view source_label) const;
  LabelAssignment labels() const;

  friend bool operator==(const VertexMap& a, const VertexMap& b);

 private:
  SimplicialGraph source_;
  SimplicialGraph target_;
  std::vector<std::size_t> image_;
};

/// The map "apply first, then second". Throws DomainError if the graphs
/// do not line up.
VertexMap compose(const VertexMap& first, const VertexMap& second);

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSubset& s);

/// Throws DomainError if sub is not a subgraph of g.
bool is_full_subgraph(const SimplicialGraph& g, const SimplicialGraph& sub);

/// Strict homomorphism check: every source edge lands on a target edge.
bool verify_graph_homomorphism(const VertexMap& f);

/// Injective, and adjacency in the source matches adjacency of the images
/// in the target (edges and non-edges both preserved).
bool verify_induced_embedding(const VertexMap& f);

/// f must be a bijection s1 -> s2 (DomainError otherwise).
bool verify_induced_subgraph_isomorphism(const SimplicialGraph& g, const VertexSubset& s1,
                                         const VertexSubset& s2, const LabelAssignment& f);

enum class SearchStatus { found, not_found, budget_exhausted };

struct HomomorphismSearch {
  SearchStatus status;
  std::optional<VertexMap> map;
  std::uint64_t nodes = 0;
};

struct IsomorphismSearch {
  SearchStatus status;
  LabelAssignment bijection;
  std::uint64_t nodes = 0;
};

/// Depth-first backtracking in source declaration order, pruning as soon as
/// an assigned edge misses the target. budget counts search-tree nodes and
/// must be positive.
HomomorphismSearch find_graph_homomorphism(const SimplicialGraph& source,
                                           const SimplicialGraph& target, std::uint64_t budget);

IsomorphismSearch find_induced_subgraph_isomorphism(const SimplicialGraph& g,
                                                    const VertexSubset& s1,
                                                    const VertexSubset& s2, std::uint64_t budget);

/// G(n, p) with labels v0..v(n-1); pairs are visited in (i, j), i < j order.
SimplicialGraph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace raag
