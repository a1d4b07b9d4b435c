#include <algorithm>

#include "doctest.h"
#include "raag/errors.hpp"
#include "raag/graph_io.hpp"
#include "raag/random.hpp"
#include "raag/sharing.hpp"

using namespace raag;
using namespace raag::sharing;

namespace {

BitColumn bits(const char* s) { return parse_bits(s); }

BitColumn random_bits(std::size_t k, Rng& rng) {
  BitColumn c;
  for (std::size_t i = 0; i < k; ++i) c.bits.push_back(static_cast<std::uint8_t>(uniform_below(rng, 2)));
  return c;
}

}  // namespace

TEST_CASE("split_bits_nn") {
  const auto parts = split_bits_nn(bits("101"), 2, 7);
  REQUIRE(parts.size() == 2);
  std::vector<BitColumn> pair{bits("110"), bits("011")};
  CHECK(reconstruct_nn(pair) == bits("101"));

  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto c = random_bits(1 + uniform_below(rng, 16), rng);
    const auto n = 2 + uniform_below(rng, 5);
    const auto split = split_bits_nn(c, n, rng());
    CHECK(split.size() == n);
    CHECK(reconstruct_nn(split) == c);
  }
  const auto zeros = split_bits_nn(bits("0000"), 3, 5);
  CHECK(reconstruct_nn(zeros) == bits("0000"));
  CHECK(split_bits_nn(bits("1011"), 4, 3) == split_bits_nn(bits("1011"), 4, 3));
  CHECK_THROWS_AS(split_bits_nn(bits("1"), 1, 0), DomainError);
}

TEST_CASE("reconstruct_nn") {
  std::vector<BitColumn> one{bits("1001")};
  CHECK(reconstruct_nn(one) == bits("1001"));
  std::vector<BitColumn> mismatched{bits("10"), bits("1")};
  CHECK_THROWS_AS(reconstruct_nn(mismatched), DomainError);
  CHECK_THROWS_AS(reconstruct_nn(std::vector<BitColumn>{}), DomainError);
}

TEST_CASE("encode and decode columns") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Raag g(random_graph(1 + uniform_below(rng, 7), uniform_unit(rng), rng()));
    const auto c = random_bits(1 + uniform_below(rng, 12), rng);
    const auto wc = encode_column(g, c, 2 + uniform_below(rng, 30), rng());
    CHECK(decode_column(g, wc) == c);
  }
  const Raag g(random_graph(4, 0.5, 1));
  const auto ones = encode_column(g, bits("1111"), 10, 2);
  for (const auto& word : ones.words) CHECK(is_trivial(g, word));

  WordColumn empties{{Word{}, Word{}}};
  CHECK(decode_column(g, empties) == bits("11"));
  WordColumn singles{{parse_word("v0"), parse_word("v1^-1")}};
  CHECK(decode_column(g, singles) == bits("00"));
}

TEST_CASE("decoding under the wrong graph can disagree") {
  const Raag right(parse_graph("vertices a b\nedge a b\n"));
  const Raag wrong(parse_graph("vertices a b\n"));
  // A conjugated defining commutator of the right group.
  const WordColumn fixture{{parse_word("b a b a^-1 b^-1 b^-1")}};
  CHECK(decode_column(right, fixture) == bits("1"));
  CHECK(decode_column(wrong, fixture) == bits("0"));

  const auto column = encode_column(right, bits("1111"), 8, 1);
  CHECK(decode_column(right, column) == bits("1111"));
  CHECK_FALSE(decode_column(wrong, column) == bits("1111"));
}

TEST_CASE("deal_nn round trip") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const auto n = 2 + uniform_below(rng, 5);
    const auto k = 1 + uniform_below(rng, 16);
    const auto setup = make_setup_nn(n, k, 2 + uniform_below(rng, 6), 0.5, rng());
    const auto secret = random_bits(k, rng);
    const auto shares = deal_nn(setup, secret, 12, rng());
    std::vector<BitColumn> decoded;
    for (const auto& s : shares) decoded.push_back(decode_column(Raag(s.relators), s.column));
    CHECK(reconstruct_nn(decoded) == secret);
  }
  const auto setup = make_setup_nn(2, 1, 3, 0.5, 4);
  const auto shares = deal_nn(setup, bits("1"), 8, 4);
  const auto b0 = decode_column(Raag(shares[0].relators), shares[0].column).bits[0];
  const auto b1 = decode_column(Raag(shares[1].relators), shares[1].column).bits[0];
  CHECK((b0 ^ b1) == 1);

  CHECK_THROWS_AS(deal_nn(setup, bits("11"), 8, 4), DomainError);
  CHECK_THROWS_AS(make_setup_nn(1, 2, 3, 0.5, 0), DomainError);
}

TEST_CASE("primality and bit widths") {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 4294967291ULL};
  for (auto p : primes) CHECK(is_prime(p));
  for (std::uint64_t c : {0ULL, 1ULL, 4ULL, 9ULL, 15ULL, 4294967297ULL}) CHECK_FALSE(is_prime(c));
  CHECK(bit_width_for(7) == 3);
  CHECK(bit_width_for(8) == 3);
  CHECK(bit_width_for(11) == 4);
  CHECK(bit_width_for(2) == 1);
}

TEST_CASE("int_to_bits / bits_to_int") {
  CHECK(int_to_bits(5, 4) == bits("0101"));
  CHECK(int_to_bits(0, 3) == bits("000"));
  for (std::size_t k = 1; k <= 10; ++k) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); ++y) CHECK(bits_to_int(int_to_bits(y, k)) == y);
  }
  CHECK_THROWS_AS(int_to_bits(16, 4), DomainError);
}

TEST_CASE("shamir_split evaluates f(i) mod p") {
  // f(X) = 3 + 2X over Z_7: f(1) = 5, f(2) = 7 = 0.
  const auto s = shamir_split_with_coefficients({3, 2}, 7, 2);
  REQUIRE(s.points.size() == 2);
  CHECK(s.points[0] == ShamirPoint{1, 5});
  CHECK(s.points[1] == ShamirPoint{2, 0});
  CHECK(s.setup.secret == 3);

  const auto zero = shamir_split_with_coefficients({0, 0, 0}, 11, 5);
  for (const auto& pt : zero.points) CHECK(pt.value == 0);

  const auto random = shamir_split(4, 13, 3, 5, 99);
  CHECK(random.setup.coefficients.size() == 3);
  CHECK(random.setup.coefficients[0] == 4);
  for (const auto& pt : random.points) {
    CHECK(pt.value == evaluate_polynomial(random.setup.coefficients, pt.index, 13));
  }

  CHECK_THROWS_AS(shamir_split(1, 7, 1, 3, 0), DomainError);
  CHECK_THROWS_AS(shamir_split(1, 8, 2, 3, 0), DomainError);
  CHECK_THROWS_AS(shamir_split(1, 7, 4, 3, 0), DomainError);
  CHECK_THROWS_AS(shamir_split(1, 7, 2, 7, 0), DomainError);
  CHECK_THROWS_AS(shamir_split(7, 7, 2, 3, 0), DomainError);
}

TEST_CASE("lagrange_reconstruct") {
  // 5 * (-2)/(1-2) + 0 = 10 = 3 (mod 7)
  const std::vector<ShamirPoint> pts{{1, 5}, {2, 0}};
  CHECK(lagrange_reconstruct(pts, 7, 2) == 3);

  const std::vector<ShamirPoint> constant{{4, 6}, {2, 6}, {9, 6}};
  CHECK(lagrange_reconstruct(constant, 11, 3) == 6);

  // Extra points: the lowest indices are used, so a corrupted high point is ignored.
  const std::vector<ShamirPoint> extra{{3, 9 % 7}, {1, 5}, {2, 0}};
  CHECK(lagrange_reconstruct(extra, 7, 2) == 3);

  const std::vector<ShamirPoint> dup{{1, 5}, {1, 5}};
  CHECK_THROWS_AS(lagrange_reconstruct(dup, 7, 2), DomainError);
  const std::vector<ShamirPoint> few{{1, 5}};
  CHECK_THROWS_AS(lagrange_reconstruct(few, 7, 2), DomainError);
  const std::vector<ShamirPoint> zero_index{{0, 5}, {1, 2}};
  CHECK_THROWS_AS(lagrange_reconstruct(zero_index, 7, 2), DomainError);

  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::vector<std::uint64_t> ps{7, 11, 13, 101, 65537};
    const auto p = ps[uniform_below(rng, ps.size())];
    const auto n = 2 + uniform_below(rng, 5);
    const auto t = 2 + uniform_below(rng, n - 1);
    const auto x = uniform_below(rng, p);
    auto split = shamir_split(x, p, t, n, rng());
    shuffle(split.points, rng);
    CHECK(lagrange_reconstruct(split.points, p, t) == x);
  }
}

TEST_CASE("a single (t=2) share is consistent with every secret") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t i = 1; i < p; ++i) {
      for (std::uint64_t y = 0; y < p; ++y) {
        for (std::uint64_t x = 0; x < p; ++x) {
          bool consistent = false;
          for (std::uint64_t a = 0; a < p && !consistent; ++a) consistent = (x + a * i) % p == y;
          CHECK(consistent);
        }
      }
    }
  }
}

TEST_CASE("deal_tn: any t of n decoded shares give the secret") {
  const auto setup = make_setup_tn(5, 7, 2, 3, 4, 0.5, 21);
  CHECK(setup.shamir.k == 3);
  const auto shares = deal_tn(setup, 10, 22);
  std::vector<ShamirPoint> points;
  for (const auto& s : shares) points.push_back(decode_share_tn(s));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      const std::vector<ShamirPoint> subset{points[a], points[b]};
      CHECK(lagrange_reconstruct(subset, 7, 2) == 5);
    }
  }
  CHECK_THROWS_AS(make_setup_tn(5, 7, 2, 3, 4, 0.5, 21, 2), DomainError);
  CHECK(make_setup_tn(5, 7, 2, 3, 4, 0.5, 21, 6).shamir.k == 6);
}

TEST_CASE("share files") {
  const auto setup = make_setup_tn(3, 11, 2, 4, 3, 0.6, 8);
  const auto shares = deal_tn(setup, 8, 9);
  for (const auto& s : shares) {
    const auto file = share_file(s);
    const auto text = format_share(file);
    CHECK(parse_share(text) == file);
    CHECK(format_share(parse_share(text)) == text);
    const auto decoded = decode_share_file(parse_share(text), s.relators);
    CHECK(decoded.value == decode_share_tn(s).value);
    CHECK(format_decoded(parse_decoded(format_decoded(decoded))) == format_decoded(decoded));
  }

  ShareFile nn{SchemeKind::nn, 2, 3, 0, 0, {{parse_word("x1"), Word{}, parse_word("x2^-1 x1")}}};
  const auto text = format_share(nn);
  CHECK(text == "scheme nn\nparticipant 2\nk 3\nx1\n\nx2^-1 x1\n");
  CHECK(parse_share(text) == nn);

  CHECK_THROWS_AS(parse_share("scheme nn\nparticipant 1\nk 2\nx1\n"), ParseError);
  CHECK_THROWS_AS(parse_share("scheme zz\nparticipant 1\nk 1\nx1\n"), ParseError);
  CHECK_THROWS_AS(parse_share("scheme nn\nk 1\nx1\n"), ParseError);
  CHECK_THROWS_AS(parse_share("scheme nn\nparticipant 1\nk 1\nx1^3\n"), ParseError);
}

TEST_CASE("dealing is deterministic") {
  const auto setup = make_setup_nn(3, 8, 4, 0.5, 100);
  const auto secret = bits("10110010");
  const auto a = deal_nn(setup, secret, 14, 5);
  const auto b = deal_nn(setup, secret, 14, 5);
  for (std::size_t j = 0; j < a.size(); ++j) {
    CHECK(format_share(share_file(a[j])) == format_share(share_file(b[j])));
    CHECK(format_graph(a[j].relators) == format_graph(b[j].relators));
  }
}
