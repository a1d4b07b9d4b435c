#include "raag/graph.hpp"

#include <algorithm>
#include <set>

#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag {

namespace {

bool label_ok(const std::string& label) {
  if (label.empty() || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == '^' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::string to_string(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::loop: return "loop: " + v.detail;
    case ViolationKind::dangling_endpoint: return "dangling endpoint: " + v.detail;
    case ViolationKind::duplicate_edge: return "duplicate edge: " + v.detail;
    case ViolationKind::duplicate_vertex: return "duplicate vertex: " + v.detail;
    case ViolationKind::bad_label: return "bad label: '" + v.detail + "'";
  }
  return v.detail;
}

std::vector<Violation> validate_graph(const GraphDescription& d) {
  std::vector<Violation> out;
  std::set<std::string, std::less<>> seen;
  for (const auto& v : d.vertices) {
    if (!label_ok(v)) out.push_back({ViolationKind::bad_label, v});
    if (!seen.insert(v).second) out.push_back({ViolationKind::duplicate_vertex, v});
  }
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : d.edges) {
    const std::string name = a + " " + b;
    if (a == b) out.push_back({ViolationKind::loop, name});
    if (!seen.contains(a)) out.push_back({ViolationKind::dangling_endpoint, a});
    if (!seen.contains(b)) out.push_back({ViolationKind::dangling_endpoint, b});
    auto key = a < b ? std::pair{a, b} : std::pair{b, a};
    if (!edges.insert(key).second) out.push_back({ViolationKind::duplicate_edge, name});
  }
  return out;
}

struct SimplicialGraph::Body {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::size_t, std::less<>> index;
  std::vector<std::uint8_t> adjacency;
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<std::vector<std::size_t>> non_neighbors;

  Body(std::vector<std::string> labels, const std::vector<Edge>& edge_list)
      : vertices(std::move(labels)) {
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) index.emplace(vertices[i], i);
    adjacency.assign(n * n, 0);
    for (const auto& e : edge_list) {
      if (e.u >= n || e.v >= n || e.u == e.v) {
        throw DomainError("edge endpoints must be distinct declared vertices");
      }
      if (adjacency[e.u * n + e.v]) continue;
      adjacency[e.u * n + e.v] = adjacency[e.v * n + e.u] = 1;
      auto [lo, hi] = ordered(e.u, e.v);
      edges.push_back({lo, hi});
    }
    neighbors.resize(n);
    non_neighbors.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        (adjacency[i * n + j] ? neighbors[i] : non_neighbors[i]).push_back(j);
      }
    }
  }
};

SimplicialGraph::SimplicialGraph()
    : body_(std::make_shared<const Body>(std::vector<std::string>{}, std::vector<Edge>{})) {}

SimplicialGraph::SimplicialGraph(const GraphDescription& d) {
  if (auto violations = validate_graph(d); !violations.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& v : violations) msg += " [" + to_string(v) + "]";
    throw DomainError(msg);
  }
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < d.vertices.size(); ++i) index.emplace(d.vertices[i], i);
  std::vector<Edge> edges;
  edges.reserve(d.edges.size());
  for (const auto& [a, b] : d.edges) edges.push_back({index.at(a), index.at(b)});
  body_ = std::make_shared<const Body>(d.vertices, edges);
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  GraphDescription labels_only{vertices, {}};
  if (auto violations = validate_graph(labels_only); !violations.empty()) {
    throw DomainError("invalid vertex labels: " + to_string(violations.front()));
  }
  body_ = std::make_shared<const Body>(std::move(vertices), edges);
}

std::size_t SimplicialGraph::vertex_count() const { return body_->vertices.size(); }
std::size_t SimplicialGraph::edge_count() const { return body_->edges.size(); }
const std::vector<std::string>& SimplicialGraph::vertices() const { return body_->vertices; }
const std::string& SimplicialGraph::label(std::size_t i) const { return body_->vertices.at(i); }
const std::vector<Edge>& SimplicialGraph::edges() const { return body_->edges; }

std::optional<std::size_t> SimplicialGraph::index_of(std::string_view label) const {
  auto it = body_->index.find(label);
  if (it == body_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialGraph::require_index(std::string_view label) const {
  if (auto i = index_of(label)) return *i;
  throw DomainError("unknown vertex '" + std::string(label) + "'");
}

bool SimplicialGraph::adjacent(std::size_t a, std::size_t b) const {
  return body_->adjacency[a * vertex_count() + b] != 0;
}

bool SimplicialGraph::adjacent(std::string_view a, std::string_view b) const {
  return adjacent(require_index(a), require_index(b));
}

std::span<const std::size_t> SimplicialGraph::neighbors(std::size_t v) const {
  return body_->neighbors[v];
}

std::span<const std::size_t> SimplicialGraph::non_neighbors(std::size_t v) const {
  return body_->non_neighbors[v];
}

GraphDescription SimplicialGraph::description() const {
  GraphDescription d{vertices(), {}};
  for (const auto& e : edges()) d.edges.emplace_back(label(e.u), label(e.v));
  return d;
}

bool SimplicialGraph::has_triangle() const {
  for (const auto& e : edges()) {
    for (auto w : neighbors(e.u)) {
      if (w != e.v && adjacent(w, e.v)) return true;
    }
  }
  return false;
}

bool operator==(const SimplicialGraph& a, const SimplicialGraph& b) {
  if (a.body_ == b.body_) return true;
  return a.vertices() == b.vertices() && a.body_->adjacency == b.body_->adjacency;
}

VertexSubset::VertexSubset(SimplicialGraph parent, const std::vector<std::string>& members)
    : parent_(std::move(parent)) {
  indices_.reserve(members.size());
  std::vector<bool> taken(parent_.vertex_count(), false);
  for (const auto& m : members) {
    const auto i = parent_.require_index(m);
    if (taken[i]) throw DomainError("vertex '" + m + "' listed twice in subset");
    taken[i] = true;
    indices_.push_back(i);
  }
}

std::vector<std::string> VertexSubset::labels() const {
  std::vector<std::string> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(parent_.label(i));
  return out;
}

bool VertexSubset::contains(std::size_t vertex) const {
  return std::find(indices_.begin(), indices_.end(), vertex) != indices_.end();
}

VertexMap::VertexMap(SimplicialGraph source, SimplicialGraph target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.vertex_count()) {
    throw DomainError("vertex map must assign every source vertex");
  }
  for (auto t : image_) {
    if (t >= target_.vertex_count()) throw DomainError("vertex map image outside target");
  }
}

VertexMap VertexMap::from_labels(SimplicialGraph source, SimplicialGraph target,
                                 const LabelAssignment& assignment) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> image(source.vertex_count(), unset);
  for (const auto& [from, to] : assignment) {
    const auto s = source.require_index(from);
    if (image[s] != unset) throw DomainError("vertex '" + from + "' mapped twice");
    image[s] = target.require_index(to);
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == unset) throw DomainError("vertex '" + source.label(i) + "' is unmapped");
  }
  return VertexMap(std::move(source), std::move(target), std::move(image));
}

const std::string& VertexMap::image_of(std::string_view source_label) const {
  return target_.label(image_[source_.require_index(source_label)]);
}

LabelAssignment VertexMap::labels() const {
  LabelAssignment out;
  out.reserve(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    out.emplace_back(source_.label(i), target_.label(image_[i]));
  }
  return out;
}

bool operator==(const VertexMap& a, const VertexMap& b) {
  return a.image_ == b.image_ && a.source_ == b.source_ && a.target_ == b.target_;
}

VertexMap compose(const VertexMap& first, const VertexMap& second) {
  if (!(first.target() == second.source())) {
    throw DomainError("cannot compose: intermediate graphs differ");
  }
  std::vector<std::size_t> image(first.source().vertex_count());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = second(first(i));
  return VertexMap(first.source(), second.target(), std::move(image));
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSubset& s) {
  if (!(s.parent() == g)) throw DomainError("subset does not belong to this graph");
  std::vector<std::size_t> position(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < s.indices().size(); ++k) position[s.indices()[k]] = k;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const auto pu = position[e.u];
    const auto pv = position[e.v];
    if (pu != static_cast<std::size_t>(-1) && pv != static_cast<std::size_t>(-1)) {
      edges.push_back({pu, pv});
    }
  }
  return SimplicialGraph(s.labels(), edges);
}

bool is_full_subgraph(const SimplicialGraph& g, const SimplicialGraph& sub) {
  std::vector<std::size_t> into(sub.vertex_count());
  for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
    auto gi = g.index_of(sub.label(i));
    if (!gi) throw DomainError("'" + sub.label(i) + "' is not a vertex of the ambient graph");
    into[i] = *gi;
  }
  for (const auto& e : sub.edges()) {
    if (!g.adjacent(into[e.u], into[e.v])) {
      throw DomainError("edge " + sub.label(e.u) + " " + sub.label(e.v) +
                        " is not an edge of the ambient graph");
    }
  }
  for (std::size_t i = 0; i < sub.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < sub.vertex_count(); ++j) {
      if (g.adjacent(into[i], into[j]) && !sub.adjacent(i, j)) return false;
    }
  }
  return true;
}

bool verify_graph_homomorphism(const VertexMap& f) {
  return std::all_of(f.source().edges().begin(), f.source().edges().end(), [&](const Edge& e) {
    const auto a = f(e.u);
    const auto b = f(e.v);
    return a != b && f.target().adjacent(a, b);
  });
}

bool verify_induced_embedding(const VertexMap& f) {
  const auto n = f.source().vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (f(i) == f(j)) return false;
      if (f.source().adjacent(i, j) != f.target().adjacent(f(i), f(j))) return false;
    }
  }
  return true;
}

bool verify_induced_subgraph_isomorphism(const SimplicialGraph& g, const VertexSubset& s1,
                                         const VertexSubset& s2, const LabelAssignment& f) {
  if (!(s1.parent() == g) || !(s2.parent() == g)) {
    throw DomainError("subsets do not belong to this graph");
  }
  if (s1.size() != s2.size() || f.size() != s1.size()) {
    throw DomainError("map is not a bijection between the subsets");
  }
  const auto source = induced_subgraph(g, s1);
  const auto target = induced_subgraph(g, s2);
  const auto map = VertexMap::from_labels(source, target, f);
  std::vector<bool> hit(target.vertex_count(), false);
  for (auto t : map.image()) {
    if (hit[t]) throw DomainError("map is not injective");
    hit[t] = true;
  }
  return verify_induced_embedding(map);
}

SimplicialGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bernoulli(rng, p)) edges.push_back({i, j});
    }
  }
  return SimplicialGraph(std::move(labels), edges);
}

}  // namespace raag
