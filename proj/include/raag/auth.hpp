#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag::auth {

enum class Scheme { hom, sub };
enum class Strategy { honest, cheat_guess_0, cheat_guess_1, cheat_random };

std::string to_string(Scheme s);
std::string to_string(Strategy s);
/// DomainError on an unknown name.
Scheme parse_scheme(std::string_view name);
Strategy parse_strategy(std::string_view name);

// --- homomorphism scheme --------------------------------------------------

struct HomParams {
  std::size_t source_vertices = 12;    // |V(G1)|
  std::size_t target_vertices = 6;     // |V(G2)|, at least 3
  double target_edge_probability = 0.5;
  double keep_probability = 0.9;       // pulled-back edges kept in G1
  std::size_t commitment_vertices = 24;
  double commitment_keep_probability = 0.9;
};

struct HomPublicKey {
  SimplicialGraph source;  // G1
  SimplicialGraph target;  // G2, contains a triangle
};

struct HomKeyPair {
  HomPublicKey pub;
  VertexMap secret;  // G1 -> G2, a strict graph homomorphism
  HomParams params;
};

/// G2 is a random graph with a planted triangle; the secret map is a random
/// vertex assignment and G1 keeps a random subset of the pairs whose images
/// are adjacent, so the secret map verifies by construction.
HomKeyPair hom_keygen(const HomParams& params, std::uint64_t seed);

/// A published graph plus the prover's private map out of it.
struct Commitment {
  SimplicialGraph graph;
  VertexMap session;
};

/// Pulls G1 back along a random assignment from `size` fresh vertices,
/// keeping each available edge with params.commitment_keep_probability.
Commitment hom_commit(const HomKeyPair& key, std::size_t size, std::uint64_t seed);

// --- special subgroup scheme ----------------------------------------------

struct SubParams {
  std::size_t ambient_vertices = 16;
  std::size_t subset_size = 8;
  double edge_probability = 0.5;
};

struct SubPublicKey {
  SimplicialGraph ambient;
  VertexSubset first;   // generators of G1
  VertexSubset second;  // generators of G2
};

struct SubKeyPair {
  SubPublicKey pub;
  /// induced(first) -> induced(second), an isomorphism of induced subgraphs.
  VertexMap secret;
  SubParams params;
};

/// Plants two disjoint subsets carrying the same random pattern graph.
/// Requires ambient_vertices >= 2 * subset_size and subset_size >= 1.
SubKeyPair sub_keygen(const SubParams& params, std::uint64_t seed);

/// Fresh relabelling (c0, c1, ...) of the induced subgraph on the first
/// subset, in random order; the session map points into the ambient graph.
Commitment sub_commit(const SubKeyPair& key, std::uint64_t seed);

// --- rounds ---------------------------------------------------------------

/// One commit / challenge / respond / verify exchange. Each step may only
/// happen once and only after the previous one (std::logic_error otherwise).
class RoundState {
 public:
  explicit RoundState(Commitment commitment) : commitment_(std::move(commitment)) {}

  const SimplicialGraph& commitment() const { return commitment_.graph; }
  const VertexMap& session() const { return commitment_.session; }

  void set_challenge(int c);
  void set_response(LabelAssignment response);
  void set_verdict(bool accepted);

  const std::optional<int>& challenge() const { return challenge_; }
  const std::optional<LabelAssignment>& response() const { return response_; }
  const std::optional<bool>& verdict() const { return verdict_; }

 private:
  Commitment commitment_;
  std::optional<int> challenge_;
  std::optional<LabelAssignment> response_;
  std::optional<bool> verdict_;
};

/// Challenge 0: the session map. Challenge 1: session map followed by the
/// secret map. Throws std::logic_error if no challenge is set.
VertexMap hom_respond(const RoundState& state, const HomKeyPair& key);
VertexMap sub_respond(const RoundState& state, const SubKeyPair& key);

/// Accept iff the response is a total map from the commitment's vertices
/// into G1 (c = 0) or G2 (c = 1) that is a strict homomorphism. The image
/// need not cover the target. Malformed responses are rejected.
bool hom_verify(const SimplicialGraph& commitment, int challenge, const LabelAssignment& response,
                const HomPublicKey& pub);

/// Accept iff the response is a bijection from the commitment's vertices
/// onto exactly the first (c = 0) or second (c = 1) subset that preserves
/// edges and non-edges.
bool sub_verify(const SimplicialGraph& commitment, int challenge, const LabelAssignment& response,
                const SubPublicKey& pub);

struct Transcript {
  Scheme scheme = Scheme::hom;
  std::vector<RoundState> rounds;
  bool accept = false;
};

/// Line-oriented log: `round <i> challenge <c> verdict <accept|reject>` per
/// round, then `accept <true|false>`.
std::string format_transcript(const Transcript& t);

/// r independent rounds with fresh commitments. Challenges come from the
/// verifier seed only; commitments and cheating choices from the prover
/// seed. Cheaters never read the secret map: cheat-guess-b commits so that
/// only challenge b is answerable and sends a random well-formed map for
/// the other; cheat-random picks b per round.
Transcript run_protocol(const HomKeyPair& key, std::size_t rounds, Strategy strategy,
                        std::uint64_t prover_seed, std::uint64_t verifier_seed);
Transcript run_protocol(const SubKeyPair& key, std::size_t rounds, Strategy strategy,
                        std::uint64_t prover_seed, std::uint64_t verifier_seed);

struct SimulationResult {
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
  double rate() const { return trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0; }
};

/// Runs `trials` protocol executions with per-trial seeds derived from
/// `seed`, spread over `threads` workers (0 = hardware concurrency). The
/// count does not depend on the thread count.
SimulationResult simulate(const HomKeyPair& key, Strategy strategy, std::size_t rounds,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);
SimulationResult simulate(const SubKeyPair& key, Strategy strategy, std::size_t rounds,
                          std::uint64_t trials, std::uint64_t seed, unsigned threads = 0);

// --- key files --------------------------------------------------------------

/// Subset file: `subset first <labels...>` and `subset second <labels...>`.
std::string format_subsets(const SubPublicKey& pub);
SubPublicKey parse_sub_public(const SimplicialGraph& ambient, std::string_view subsets_text);

/// Writes public/ and private/ under dir:
///   hom: public/scheme, public/source.graph, public/target.graph, private/secret.map
///   sub: public/scheme, public/ambient.graph, public/subsets, private/secret.map
void write_key(const std::string& dir, const HomKeyPair& key);
void write_key(const std::string& dir, const SubKeyPair& key);

Scheme read_scheme(const std::string& key_dir);
HomPublicKey read_hom_public(const std::string& key_dir);
SubPublicKey read_sub_public(const std::string& key_dir);
HomKeyPair read_hom_key(const std::string& key_dir);
SubKeyPair read_sub_key(const std::string& key_dir);

}  // namespace raag::auth
