#include <charconv>

#include "raag/errors.hpp"
#include "raag/graph_io.hpp"
#include "raag/sharing.hpp"

namespace raag::sharing {

namespace {

std::uint64_t parse_uint(const std::string& token) {
  std::uint64_t v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("expected an unsigned integer, got '" + token + "'");
  return v;
}

class HeaderReader {
 public:
  explicit HeaderReader(std::string_view text) : lines_(split_lines(text)) {}

  std::string field(std::string_view key) {
    if (pos_ >= lines_.size()) throw ParseError("missing '" + std::string(key) + "' line");
    auto tokens = split_tokens(lines_[pos_]);
    if (tokens.size() != 2 || tokens[0] != key) {
      throw ParseError("line " + std::to_string(pos_ + 1) + ": expected '" + std::string(key) + " <value>'");
    }
    ++pos_;
    return tokens[1];
  }

  std::uint64_t number(std::string_view key) { return parse_uint(field(key)); }

  SchemeKind scheme() {
    const auto s = field("scheme");
    if (s == "nn") return SchemeKind::nn;
    if (s == "tn") return SchemeKind::tn;
    throw ParseError("unknown scheme '" + s + "'");
  }

  std::vector<std::string_view> rest() const {
    return {lines_.begin() + static_cast<std::ptrdiff_t>(pos_), lines_.end()};
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

const char* scheme_name(SchemeKind s) { return s == SchemeKind::nn ? "nn" : "tn"; }

}  // namespace

ShareFile parse_share(std::string_view text) {
  HeaderReader in(text);
  ShareFile share;
  share.scheme = in.scheme();
  share.participant = in.number("participant");
  share.k = in.number("k");
  if (share.scheme == SchemeKind::tn) {
    share.p = in.number("p");
    share.t = in.number("t");
  }
  const auto words = in.rest();
  if (words.size() != share.k) {
    throw ParseError("expected " + std::to_string(share.k) + " word lines, found " +
                     std::to_string(words.size()));
  }
  for (auto line : words) share.column.words.push_back(parse_word(line));
  return share;
}

std::string format_share(const ShareFile& share) {
  std::string out = std::string("scheme ") + scheme_name(share.scheme) + "\n";
  out += "participant " + std::to_string(share.participant) + "\n";
  out += "k " + std::to_string(share.k) + "\n";
  if (share.scheme == SchemeKind::tn) {
    out += "p " + std::to_string(share.p) + "\n";
    out += "t " + std::to_string(share.t) + "\n";
  }
  for (const auto& w : share.column.words) out += format_word(w) + "\n";
  return out;
}

ShareFile share_file(const ShareNN& share) {
  return {SchemeKind::nn, share.participant, share.column.size(), 0, 0, share.column};
}

ShareFile share_file(const ShareTN& share) {
  return {SchemeKind::tn, share.participant, share.column.size(), share.p, share.t, share.column};
}

DecodedShare decode_share_file(const ShareFile& share, const SimplicialGraph& relators) {
  if (share.column.size() != share.k) throw DomainError("share column length differs from k");
  DecodedShare out;
  out.scheme = share.scheme;
  out.participant = share.participant;
  out.bits = decode_column(Raag(relators), share.column);
  if (share.scheme == SchemeKind::tn) {
    out.p = share.p;
    out.t = share.t;
    out.value = bits_to_int(out.bits);
    if (out.value >= share.p) throw DomainError("decoded share value is not a residue mod p");
  }
  return out;
}

DecodedShare parse_decoded(std::string_view text) {
  HeaderReader in(text);
  DecodedShare d;
  d.scheme = in.scheme();
  d.participant = in.number("participant");
  if (d.scheme == SchemeKind::nn) {
    try {
      d.bits = parse_bits(in.field("bits"));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  } else {
    d.p = in.number("p");
    d.t = in.number("t");
    d.value = in.number("value");
  }
  for (auto line : in.rest()) {
    if (!split_tokens(line).empty()) throw ParseError("trailing content in decoded share");
  }
  return d;
}

std::string format_decoded(const DecodedShare& d) {
  std::string out = std::string("scheme ") + scheme_name(d.scheme) + "\n";
  out += "participant " + std::to_string(d.participant) + "\n";
  if (d.scheme == SchemeKind::nn) {
    out += "bits " + format_bits(d.bits) + "\n";
  } else {
    out += "p " + std::to_string(d.p) + "\n";
    out += "t " + std::to_string(d.t) + "\n";
    out += "value " + std::to_string(d.value) + "\n";
  }
  return out;
}

}  // namespace raag::sharing
