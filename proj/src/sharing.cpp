#include "raag/sharing.hpp"

#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag::sharing {

namespace {

SimplicialGraph relator_graph(std::size_t generators, double edge_probability, std::uint64_t seed) {
  const auto shape = random_graph(generators, edge_probability, seed);
  std::vector<std::string> labels;
  labels.reserve(generators);
  for (std::size_t i = 1; i <= generators; ++i) labels.push_back("x" + std::to_string(i));
  return SimplicialGraph(std::move(labels), shape.edges());
}

}  // namespace

BitColumn parse_bits(std::string_view text) {
  BitColumn c;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw DomainError("bit string may only contain 0 and 1");
    c.bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return c;
}

std::string format_bits(const BitColumn& c) {
  std::string out;
  for (auto b : c.bits) out += static_cast<char>('0' + b);
  return out;
}

std::vector<BitColumn> split_bits_nn(const BitColumn& c, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw DomainError("(n,n) splitting needs n >= 2");
  Rng rng(seed);
  std::vector<BitColumn> out(n);
  BitColumn last = c;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out[j].bits.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      out[j].bits[i] = static_cast<std::uint8_t>(uniform_below(rng, 2));
      last.bits[i] ^= out[j].bits[i];
    }
  }
  out[n - 1] = std::move(last);
  return out;
}

BitColumn reconstruct_nn(std::span<const BitColumn> columns) {
  if (columns.empty()) throw DomainError("nothing to reconstruct");
  BitColumn out = columns.front();
  for (const auto& c : columns.subspan(1)) {
    if (c.size() != out.size()) throw DomainError("bit columns differ in length");
    for (std::size_t i = 0; i < c.size(); ++i) out.bits[i] ^= c.bits[i];
  }
  return out;
}

WordColumn encode_column(const Raag& group, const BitColumn& c, std::size_t target_length,
                         std::uint64_t seed) {
  if (target_length == 0) throw DomainError("word length must be positive");
  const auto even_length = target_length + (target_length % 2);
  WordColumn out;
  out.words.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto word_seed = derive_seed(seed, i);
    out.words.push_back(c.bits[i] ? sample_trivial_word(group, even_length, word_seed)
                                  : sample_nontrivial_word(group, target_length, word_seed));
  }
  return out;
}

BitColumn decode_column(const Raag& group, const WordColumn& wc) {
  BitColumn out;
  out.bits.reserve(wc.size());
  for (const auto& w : wc.words) out.bits.push_back(is_trivial(group, w) ? 1 : 0);
  return out;
}

DealerSetupNN make_setup_nn(std::size_t n, std::size_t k, std::size_t generators,
                            double edge_probability, std::uint64_t seed) {
  if (n < 2) throw DomainError("(n,n) scheme needs n >= 2");
  if (k == 0) throw DomainError("column length k must be positive");
  if (generators == 0) throw DomainError("need at least one public generator");
  DealerSetupNN setup;
  setup.n = n;
  setup.k = k;
  for (std::size_t j = 0; j < n; ++j) {
    setup.participant_graphs.push_back(relator_graph(generators, edge_probability, derive_seed(seed, j)));
  }
  setup.public_generators = setup.participant_graphs.front().vertices();
  return setup;
}

std::vector<ShareNN> deal_nn(const DealerSetupNN& setup, const BitColumn& secret,
                             std::size_t word_length, std::uint64_t seed) {
  if (setup.participant_graphs.size() != setup.n) {
    throw DomainError("setup must hold one relator graph per participant");
  }
  if (secret.size() != setup.k) throw DomainError("secret length differs from k");
  for (const auto& g : setup.participant_graphs) {
    if (g.vertices() != setup.public_generators) {
      throw DomainError("participant graphs must use exactly the public generators");
    }
  }
  const auto columns = split_bits_nn(secret, setup.n, derive_seed(seed, 0));
  std::vector<ShareNN> shares;
  shares.reserve(setup.n);
  for (std::size_t j = 0; j < setup.n; ++j) {
    const Raag group(setup.participant_graphs[j]);
    shares.push_back({j + 1, setup.participant_graphs[j],
                      encode_column(group, columns[j], word_length, derive_seed(seed, j + 1))});
  }
  return shares;
}

DealerSetupTN make_setup_tn(std::uint64_t x, std::uint64_t p, std::size_t t, std::size_t n,
                            std::size_t generators, double edge_probability, std::uint64_t seed,
                            std::optional<std::size_t> k) {
  if (generators == 0) throw DomainError("need at least one public generator");
  DealerSetupTN setup;
  setup.shamir = shamir_split(x, p, t, n, derive_seed(seed, 0)).setup;
  if (k) {
    if (*k < bit_width_for(p)) throw DomainError("k too small to write residues mod p");
    setup.shamir.k = *k;
  }
  for (std::size_t i = 0; i < n; ++i) {
    setup.participant_graphs.push_back(
        relator_graph(generators, edge_probability, derive_seed(seed, i + 1)));
  }
  setup.public_generators = setup.participant_graphs.front().vertices();
  return setup;
}

std::vector<ShareTN> deal_tn(const DealerSetupTN& setup, std::size_t word_length,
                             std::uint64_t seed) {
  const auto& s = setup.shamir;
  if (setup.participant_graphs.size() != s.n) {
    throw DomainError("setup must hold one relator graph per participant");
  }
  std::vector<ShareTN> shares;
  shares.reserve(s.n);
  for (std::size_t i = 1; i <= s.n; ++i) {
    const auto y = evaluate_polynomial(s.coefficients, i, s.p);
    const auto& g = setup.participant_graphs[i - 1];
    shares.push_back({i, g,
                      encode_column(Raag(g), int_to_bits(y, s.k), word_length, derive_seed(seed, i)),
                      s.p, s.t});
  }
  return shares;
}

ShamirPoint decode_share_tn(const ShareTN& share) {
  const auto value = bits_to_int(decode_column(Raag(share.relators), share.column));
  if (value >= share.p) throw DomainError("decoded share value is not a residue mod p");
  return {share.participant, value};
}

}  // namespace raag::sharing
