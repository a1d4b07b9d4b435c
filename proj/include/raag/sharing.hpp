#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"
#include "raag/raag.hpp"
#include "raag/word.hpp"

namespace raag::sharing {

/// Column of k bits, most significant first when read as an integer.
struct BitColumn {
  std::vector<std::uint8_t> bits;

  std::size_t size() const { return bits.size(); }
  friend bool operator==(const BitColumn&, const BitColumn&) = default;
};

/// Parses a string of '0'/'1' characters (DomainError otherwise).
BitColumn parse_bits(std::string_view text);
std::string format_bits(const BitColumn& c);

/// n columns whose XOR is c; the first n - 1 are uniform given the seed.
std::vector<BitColumn> split_bits_nn(const BitColumn& c, std::size_t n, std::uint64_t seed);
/// Entrywise XOR. Throws DomainError on an empty input or length mismatch.
BitColumn reconstruct_nn(std::span<const BitColumn> columns);

/// One public word per bit.
struct WordColumn {
  std::vector<Word> words;

  std::size_t size() const { return words.size(); }
  friend bool operator==(const WordColumn&, const WordColumn&) = default;
};

/// Word i is trivial in the group exactly when bit i is 1.
WordColumn encode_column(const Raag& group, const BitColumn& c, std::size_t target_length,
                         std::uint64_t seed);
BitColumn decode_column(const Raag& group, const WordColumn& wc);

/// Participant graphs share the public generators x1..xm; each graph's edge
/// set is that participant's secret commutator relators.
struct DealerSetupNN {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> public_generators;
  std::vector<SimplicialGraph> participant_graphs;
};

struct ShareNN {
  std::size_t participant = 0;  // 1-based
  SimplicialGraph relators;     // secret channel
  WordColumn column;            // public
};

/// Draws n random relator graphs on m generators x1..xm.
DealerSetupNN make_setup_nn(std::size_t n, std::size_t k, std::size_t generators,
                            double edge_probability, std::uint64_t seed);

std::vector<ShareNN> deal_nn(const DealerSetupNN& setup, const BitColumn& secret,
                             std::size_t word_length, std::uint64_t seed);

// --- (t, n) scheme over Z_p -------------------------------------------------

/// Deterministic trial division; intended for moduli below 2^32.
bool is_prime(std::uint64_t p);

/// Smallest k with 2^k >= p.
std::size_t bit_width_for(std::uint64_t p);

/// Big-endian k-bit encoding; DomainError if y >= 2^k.
BitColumn int_to_bits(std::uint64_t y, std::size_t k);
std::uint64_t bits_to_int(const BitColumn& c);

struct ShamirPoint {
  std::uint64_t index;
  std::uint64_t value;
  friend bool operator==(const ShamirPoint&, const ShamirPoint&) = default;
};

struct ShamirSetup {
  std::uint64_t p = 0;
  std::size_t t = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint64_t secret = 0;
  /// coefficients[0] is the secret; degree at most t - 1.
  std::vector<std::uint64_t> coefficients;
};

struct ShamirSplit {
  ShamirSetup setup;
  std::vector<ShamirPoint> points;  // (i, f(i)) for i = 1..n
};

/// Requires p prime, 2 <= t <= n < p and x < p.
ShamirSplit shamir_split(std::uint64_t x, std::uint64_t p, std::size_t t, std::size_t n,
                         std::uint64_t seed);
/// Same, with the polynomial given explicitly (size t, entries < p).
ShamirSplit shamir_split_with_coefficients(std::vector<std::uint64_t> coefficients, std::uint64_t p,
                                           std::size_t n);

std::uint64_t evaluate_polynomial(std::span<const std::uint64_t> coefficients, std::uint64_t x,
                                  std::uint64_t p);

/// Interpolates f(0) from the t points with the lowest indices. Throws
/// DomainError on duplicate or zero indices or fewer than t points.
std::uint64_t lagrange_reconstruct(std::span<const ShamirPoint> points, std::uint64_t p,
                                   std::size_t t);

struct DealerSetupTN {
  ShamirSetup shamir;
  std::vector<std::string> public_generators;
  std::vector<SimplicialGraph> participant_graphs;
};

struct ShareTN {
  std::size_t participant = 0;  // evaluation index i
  SimplicialGraph relators;
  WordColumn column;            // encodes y_i in k bits
  std::uint64_t p = 0;
  std::size_t t = 0;
};

/// Splits x with shamir_split and draws relator graphs as make_setup_nn
/// does. k defaults to bit_width_for(p).
DealerSetupTN make_setup_tn(std::uint64_t x, std::uint64_t p, std::size_t t, std::size_t n,
                            std::size_t generators, double edge_probability, std::uint64_t seed,
                            std::optional<std::size_t> k = std::nullopt);

std::vector<ShareTN> deal_tn(const DealerSetupTN& setup, std::size_t word_length,
                             std::uint64_t seed);

/// What a participant learns from its share: (i, y_i).
ShamirPoint decode_share_tn(const ShareTN& share);

// --- share files -------------------------------------------------------------

enum class SchemeKind { nn, tn };

/// Text form of a public share:
///   scheme nn|tn
///   participant <j>
///   k <int>
///   p <int>      (tn only)
///   t <int>      (tn only)
/// followed by exactly k word lines (an empty line is the empty word).
struct ShareFile {
  SchemeKind scheme = SchemeKind::nn;
  std::size_t participant = 0;
  std::size_t k = 0;
  std::uint64_t p = 0;
  std::size_t t = 0;
  WordColumn column;

  friend bool operator==(const ShareFile&, const ShareFile&) = default;
};

ShareFile parse_share(std::string_view text);
std::string format_share(const ShareFile& share);
ShareFile share_file(const ShareNN& share);
ShareFile share_file(const ShareTN& share);

/// Result of a participant decoding its share, in text form:
///   scheme nn / participant <j> / bits <0101...>
///   scheme tn / participant <i> / p <p> / t <t> / value <y>
struct DecodedShare {
  SchemeKind scheme = SchemeKind::nn;
  std::size_t participant = 0;
  BitColumn bits;
  std::uint64_t p = 0;
  std::size_t t = 0;
  std::uint64_t value = 0;
};

DecodedShare decode_share_file(const ShareFile& share, const SimplicialGraph& relators);
DecodedShare parse_decoded(std::string_view text);
std::string format_decoded(const DecodedShare& decoded);

}  // namespace raag::sharing
