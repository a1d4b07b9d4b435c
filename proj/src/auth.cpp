#include "raag/auth.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag::auth {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Graph on `size` fresh vertices together with a random assignment into
// `onto`; a pair becomes an edge only if its images are adjacent, so the
// assignment is a homomorphism.
Commitment pull_back(const SimplicialGraph& onto, std::size_t size, double keep,
                     const std::string& prefix, Rng& rng) {
  if (onto.vertex_count() == 0) throw DomainError("cannot pull back from an empty graph");
  std::vector<std::size_t> image(size);
  for (auto& t : image) t = uniform_below(rng, onto.vertex_count());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (image[i] != image[j] && onto.adjacent(image[i], image[j]) && bernoulli(rng, keep)) {
        edges.push_back({i, j});
      }
    }
  }
  SimplicialGraph graph(numbered(prefix, size), edges);
  VertexMap map(graph, onto, std::move(image));
  return {std::move(graph), std::move(map)};
}

// Relabelled copy of the induced subgraph on `subset`, vertices in random
// order; the map sends each copy vertex back to its ambient original.
Commitment relabelled_copy(const SimplicialGraph& ambient, const VertexSubset& subset, Rng& rng) {
  auto order = subset.indices();
  shuffle(order, rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (ambient.adjacent(order[i], order[j])) edges.push_back({i, j});
    }
  }
  SimplicialGraph graph(numbered("c", order.size()), edges);
  VertexMap map(graph, ambient, std::move(order));
  return {std::move(graph), std::move(map)};
}

LabelAssignment random_assignment(const SimplicialGraph& from, const SimplicialGraph& to, Rng& rng) {
  LabelAssignment out;
  for (const auto& v : from.vertices()) {
    out.emplace_back(v, to.vertex_count() ? to.label(uniform_below(rng, to.vertex_count())) : v);
  }
  return out;
}

LabelAssignment random_bijection(const SimplicialGraph& from, const VertexSubset& onto, Rng& rng) {
  auto targets = onto.labels();
  shuffle(targets, rng);
  LabelAssignment out;
  for (std::size_t i = 0; i < from.vertex_count(); ++i) {
    out.emplace_back(from.label(i), i < targets.size() ? targets[i] : from.label(i));
  }
  return out;
}

struct HomOps {
  const HomKeyPair& key;

  static constexpr Scheme scheme = Scheme::hom;

  Commitment commit(int answerable, Rng& rng) const {
    const auto& onto = answerable == 1 ? key.pub.target : key.pub.source;
    return pull_back(onto, key.params.commitment_vertices, key.params.commitment_keep_probability, "g", rng);
  }
  VertexMap respond(const RoundState& s) const { return hom_respond(s, key); }
  LabelAssignment junk(const RoundState& s, int c, Rng& rng) const {
    return random_assignment(s.commitment(), c == 0 ? key.pub.source : key.pub.target, rng);
  }
  bool verify(const RoundState& s) const {
    return hom_verify(s.commitment(), *s.challenge(), *s.response(), key.pub);
  }
};

struct SubOps {
  const SubKeyPair& key;

  static constexpr Scheme scheme = Scheme::sub;

  Commitment commit(int answerable, Rng& rng) const {
    return relabelled_copy(key.pub.ambient, answerable == 1 ? key.pub.second : key.pub.first, rng);
  }
  VertexMap respond(const RoundState& s) const { return sub_respond(s, key); }
  LabelAssignment junk(const RoundState& s, int c, Rng& rng) const {
    return random_bijection(s.commitment(), c == 0 ? key.pub.first : key.pub.second, rng);
  }
  bool verify(const RoundState& s) const {
    return sub_verify(s.commitment(), *s.challenge(), *s.response(), key.pub);
  }
};

template <typename Ops>
Transcript run_rounds(const Ops& ops, std::size_t rounds, Strategy strategy,
                      std::uint64_t prover_seed, std::uint64_t verifier_seed) {
  if (rounds == 0) throw DomainError("need at least one round");
  Rng verifier(verifier_seed);
  Transcript t;
  t.scheme = Ops::scheme;
  t.rounds.reserve(rounds);
  t.accept = true;
  for (std::size_t r = 0; r < rounds; ++r) {
    Rng prover(derive_seed(prover_seed, r));
    int guess = -1;  // -1: honest
    switch (strategy) {
      case Strategy::honest: break;
      case Strategy::cheat_guess_0: guess = 0; break;
      case Strategy::cheat_guess_1: guess = 1; break;
      case Strategy::cheat_random: guess = static_cast<int>(uniform_below(prover, 2)); break;
    }
    RoundState state(ops.commit(guess == 1 ? 1 : 0, prover));
    state.set_challenge(static_cast<int>(uniform_below(verifier, 2)));
    const int c = *state.challenge();
    if (guess < 0) {
      state.set_response(ops.respond(state).labels());
    } else if (c == guess) {
      state.set_response(state.session().labels());
    } else {
      state.set_response(ops.junk(state, c, prover));
    }
    state.set_verdict(ops.verify(state));
    t.accept = t.accept && *state.verdict();
    t.rounds.push_back(std::move(state));
  }
  return t;
}

template <typename Key>
SimulationResult simulate_impl(const Key& key, Strategy strategy, std::size_t rounds,
                               std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(trials, 1)));
  std::vector<std::uint64_t> accepted(threads, 0);
  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < trials; i += threads) {
      const auto t = run_protocol(key, rounds, strategy, derive_seed(seed, 2 * i), derive_seed(seed, 2 * i + 1));
      accepted[w] += t.accept ? 1 : 0;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  SimulationResult out{trials, 0};
  for (auto a : accepted) out.accepted += a;
  return out;
}

int require_challenge(const RoundState& state) {
  if (!state.challenge()) throw std::logic_error("no challenge has been issued");
  return *state.challenge();
}

}  // namespace

std::string to_string(Scheme s) { return s == Scheme::hom ? "hom" : "sub"; }

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::honest: return "honest";
    case Strategy::cheat_guess_0: return "cheat-guess-0";
    case Strategy::cheat_guess_1: return "cheat-guess-1";
    case Strategy::cheat_random: return "cheat-random";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "hom") return Scheme::hom;
  if (name == "sub") return Scheme::sub;
  throw DomainError("unknown scheme '" + std::string(name) + "'");
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::honest, Strategy::cheat_guess_0, Strategy::cheat_guess_1, Strategy::cheat_random}) {
    if (to_string(s) == name) return s;
  }
  throw DomainError("unknown strategy '" + std::string(name) + "'");
}

HomKeyPair hom_keygen(const HomParams& params, std::uint64_t seed) {
  if (params.target_vertices < 3) throw DomainError("target graph needs at least 3 vertices");
  if (params.source_vertices == 0) throw DomainError("source graph needs at least 1 vertex");
  if (params.commitment_vertices == 0) throw DomainError("commitments need at least 1 vertex");
  Rng rng(seed);
  const auto shape = random_graph(params.target_vertices, params.target_edge_probability, rng());
  std::vector<std::size_t> corners(params.target_vertices);
  for (std::size_t i = 0; i < corners.size(); ++i) corners[i] = i;
  shuffle(corners, rng);
  auto edges = shape.edges();
  edges.push_back({corners[0], corners[1]});
  edges.push_back({corners[1], corners[2]});
  edges.push_back({corners[0], corners[2]});
  SimplicialGraph target(numbered("b", params.target_vertices), edges);

  auto pulled = pull_back(target, params.source_vertices, params.keep_probability, "a", rng);
  return {{pulled.graph, target}, std::move(pulled.session), params};
}

Commitment hom_commit(const HomKeyPair& key, std::size_t size, std::uint64_t seed) {
  if (size == 0) throw DomainError("commitment needs at least 1 vertex");
  Rng rng(seed);
  return pull_back(key.pub.source, size, key.params.commitment_keep_probability, "g", rng);
}

SubKeyPair sub_keygen(const SubParams& params, std::uint64_t seed) {
  const auto m = params.subset_size;
  const auto n = params.ambient_vertices;
  if (m == 0) throw DomainError("subset size must be positive");
  if (n < 2 * m) throw DomainError("ambient graph needs at least twice the subset size");
  Rng rng(seed);
  const auto pattern = random_graph(m, params.edge_probability, rng());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  const std::vector<std::size_t> first(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
  const std::vector<std::size_t> second(order.begin() + static_cast<std::ptrdiff_t>(m),
                                        order.begin() + static_cast<std::ptrdiff_t>(2 * m));
  // slot[v] = position of v inside its planted subset and which subset.
  std::vector<int> side(n, -1);
  std::vector<std::size_t> slot(n, 0);
  for (std::size_t k = 0; k < m; ++k) {
    side[first[k]] = 0;
    slot[first[k]] = k;
    side[second[k]] = 1;
    slot[second[k]] = k;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool internal = side[i] >= 0 && side[i] == side[j];
      const bool edge = internal ? pattern.adjacent(slot[i], slot[j])
                                 : bernoulli(rng, params.edge_probability);
      if (edge) edges.push_back({i, j});
    }
  }
  SimplicialGraph ambient(numbered("v", n), edges);
  auto labels_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(ambient.label(i));
    return out;
  };
  VertexSubset s1(ambient, labels_of(first));
  VertexSubset s2(ambient, labels_of(second));
  const auto g1 = induced_subgraph(ambient, s1);
  const auto g2 = induced_subgraph(ambient, s2);
  std::vector<std::size_t> identity(m);
  for (std::size_t k = 0; k < m; ++k) identity[k] = k;
  VertexMap secret(g1, g2, std::move(identity));
  return {{std::move(ambient), std::move(s1), std::move(s2)}, std::move(secret), params};
}

Commitment sub_commit(const SubKeyPair& key, std::uint64_t seed) {
  Rng rng(seed);
  return relabelled_copy(key.pub.ambient, key.pub.first, rng);
}

void RoundState::set_challenge(int c) {
  if (c != 0 && c != 1) throw DomainError("challenge must be 0 or 1");
  if (challenge_) throw std::logic_error("challenge already issued");
  challenge_ = c;
}

void RoundState::set_response(LabelAssignment response) {
  if (!challenge_) throw std::logic_error("response before challenge");
  if (response_) throw std::logic_error("response already sent");
  response_ = std::move(response);
}

void RoundState::set_verdict(bool accepted) {
  if (!response_) throw std::logic_error("verdict before response");
  if (verdict_) throw std::logic_error("verdict already recorded");
  verdict_ = accepted;
}

VertexMap hom_respond(const RoundState& state, const HomKeyPair& key) {
  if (require_challenge(state) == 0) return state.session();
  return compose(state.session(), key.secret);
}

VertexMap sub_respond(const RoundState& state, const SubKeyPair& key) {
  const auto& session = state.session();
  if (require_challenge(state) == 0) return session;
  const auto& first = key.pub.first.indices();
  const auto& second = key.pub.second.indices();
  std::vector<std::size_t> image(session.source().vertex_count());
  for (std::size_t v = 0; v < image.size(); ++v) {
    const auto pos = std::find(first.begin(), first.end(), session(v)) - first.begin();
    if (static_cast<std::size_t>(pos) == first.size()) {
      throw DomainError("session map leaves the first subset");
    }
    image[v] = second[key.secret(static_cast<std::size_t>(pos))];
  }
  return VertexMap(session.source(), key.pub.ambient, std::move(image));
}

bool hom_verify(const SimplicialGraph& commitment, int challenge, const LabelAssignment& response,
                const HomPublicKey& pub) {
  if (challenge != 0 && challenge != 1) return false;
  try {
    const auto map = VertexMap::from_labels(commitment, challenge == 0 ? pub.source : pub.target, response);
    return verify_graph_homomorphism(map);
  } catch (const DomainError&) {
    return false;
  }
}

bool sub_verify(const SimplicialGraph& commitment, int challenge, const LabelAssignment& response,
                const SubPublicKey& pub) {
  if (challenge != 0 && challenge != 1) return false;
  const auto& subset = challenge == 0 ? pub.first : pub.second;
  try {
    const auto map = VertexMap::from_labels(commitment, pub.ambient, response);
    if (commitment.vertex_count() != subset.size()) return false;
    auto image = map.image();
    auto expected = subset.indices();
    std::sort(image.begin(), image.end());
    std::sort(expected.begin(), expected.end());
    return image == expected && verify_induced_embedding(map);
  } catch (const DomainError&) {
    return false;
  }
}

std::string format_transcript(const Transcript& t) {
  std::string out;
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const auto& r = t.rounds[i];
    out += "round " + std::to_string(i + 1) + " challenge " +
           (r.challenge() ? std::to_string(*r.challenge()) : "-") + " verdict " +
           (r.verdict().value_or(false) ? "accept" : "reject") + "\n";
  }
  out += std::string("accept ") + (t.accept ? "true" : "false") + "\n";
  return out;
}

Transcript run_protocol(const HomKeyPair& key, std::size_t rounds, Strategy strategy,
                        std::uint64_t prover_seed, std::uint64_t verifier_seed) {
  return run_rounds(HomOps{key}, rounds, strategy, prover_seed, verifier_seed);
}

Transcript run_protocol(const SubKeyPair& key, std::size_t rounds, Strategy strategy,
                        std::uint64_t prover_seed, std::uint64_t verifier_seed) {
  return run_rounds(SubOps{key}, rounds, strategy, prover_seed, verifier_seed);
}

SimulationResult simulate(const HomKeyPair& key, Strategy strategy, std::size_t rounds,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  return simulate_impl(key, strategy, rounds, trials, seed, threads);
}

SimulationResult simulate(const SubKeyPair& key, Strategy strategy, std::size_t rounds,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  return simulate_impl(key, strategy, rounds, trials, seed, threads);
}

}  // namespace raag::auth
