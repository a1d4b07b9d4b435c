#include <filesystem>
#include <optional>

#include "raag/auth.hpp"
#include "raag/errors.hpp"
#include "raag/graph_io.hpp"

namespace raag::auth {

namespace fs = std::filesystem;

namespace {

std::string join(const std::string& dir, const char* part) { return (fs::path(dir) / part).string(); }

void prepare(const std::string& dir) {
  fs::create_directories(fs::path(dir) / "public");
  fs::create_directories(fs::path(dir) / "private");
}

}  // namespace

std::string format_subsets(const SubPublicKey& pub) {
  std::string out = "subset first";
  for (const auto& l : pub.first.labels()) out += " " + l;
  out += "\nsubset second";
  for (const auto& l : pub.second.labels()) out += " " + l;
  return out + "\n";
}

SubPublicKey parse_sub_public(const SimplicialGraph& ambient, std::string_view text) {
  std::optional<std::vector<std::string>> first;
  std::optional<std::vector<std::string>> second;
  for (auto line : split_lines(text)) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() < 2 || tokens[0] != "subset") throw ParseError("expected 'subset first|second ...'");
    std::vector<std::string> members(tokens.begin() + 2, tokens.end());
    if (tokens[1] == "first" && !first) {
      first = std::move(members);
    } else if (tokens[1] == "second" && !second) {
      second = std::move(members);
    } else {
      throw ParseError("unexpected or repeated subset '" + tokens[1] + "'");
    }
  }
  if (!first || !second) throw ParseError("subset file needs both 'first' and 'second'");
  return {ambient, VertexSubset(ambient, *first), VertexSubset(ambient, *second)};
}

void write_key(const std::string& dir, const HomKeyPair& key) {
  prepare(dir);
  write_text_file(join(dir, "public/scheme"), "scheme hom\n");
  write_text_file(join(dir, "public/source.graph"), format_graph(key.pub.source));
  write_text_file(join(dir, "public/target.graph"), format_graph(key.pub.target));
  write_text_file(join(dir, "private/secret.map"), format_vertex_map(key.secret.labels()));
}

void write_key(const std::string& dir, const SubKeyPair& key) {
  prepare(dir);
  write_text_file(join(dir, "public/scheme"), "scheme sub\n");
  write_text_file(join(dir, "public/ambient.graph"), format_graph(key.pub.ambient));
  write_text_file(join(dir, "public/subsets"), format_subsets(key.pub));
  write_text_file(join(dir, "private/secret.map"), format_vertex_map(key.secret.labels()));
}

Scheme read_scheme(const std::string& key_dir) {
  const auto tokens = split_tokens(read_text_file(join(key_dir, "public/scheme")));
  if (tokens.size() != 2 || tokens[0] != "scheme") throw ParseError("malformed scheme file");
  try {
    return parse_scheme(tokens[1]);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

HomPublicKey read_hom_public(const std::string& key_dir) {
  return {parse_graph(read_text_file(join(key_dir, "public/source.graph"))),
          parse_graph(read_text_file(join(key_dir, "public/target.graph")))};
}

SubPublicKey read_sub_public(const std::string& key_dir) {
  const auto ambient = parse_graph(read_text_file(join(key_dir, "public/ambient.graph")));
  return parse_sub_public(ambient, read_text_file(join(key_dir, "public/subsets")));
}

HomKeyPair read_hom_key(const std::string& key_dir) {
  auto pub = read_hom_public(key_dir);
  auto secret = VertexMap::from_labels(pub.source, pub.target,
                                       parse_vertex_map(read_text_file(join(key_dir, "private/secret.map"))));
  HomParams params;
  params.source_vertices = pub.source.vertex_count();
  params.target_vertices = pub.target.vertex_count();
  return {std::move(pub), std::move(secret), params};
}

SubKeyPair read_sub_key(const std::string& key_dir) {
  auto pub = read_sub_public(key_dir);
  auto secret = VertexMap::from_labels(induced_subgraph(pub.ambient, pub.first),
                                       induced_subgraph(pub.ambient, pub.second),
                                       parse_vertex_map(read_text_file(join(key_dir, "private/secret.map"))));
  SubParams params;
  params.ambient_vertices = pub.ambient.vertex_count();
  params.subset_size = pub.first.size();
  return {std::move(pub), std::move(secret), params};
}

}  // namespace raag::auth
