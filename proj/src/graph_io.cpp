#include "raag/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "raag/errors.hpp"

namespace raag {

namespace {

bool skippable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

GraphDescription parse_graph_description(std::string_view text) {
  GraphDescription d;
  bool have_vertices = false;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (skippable(line)) continue;
    auto tokens = split_tokens(line);
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!have_vertices) {
      if (tokens.front() != "vertices") throw ParseError(where + "expected 'vertices' header");
      d.vertices.assign(tokens.begin() + 1, tokens.end());
      have_vertices = true;
    } else if (tokens.front() == "edge") {
      if (tokens.size() != 3) throw ParseError(where + "edge needs exactly two endpoints");
      d.edges.emplace_back(tokens[1], tokens[2]);
    } else {
      throw ParseError(where + "unexpected directive '" + tokens.front() + "'");
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices' header");
  return d;
}

SimplicialGraph parse_graph(std::string_view text) {
  return SimplicialGraph(parse_graph_description(text));
}

std::string format_graph(const SimplicialGraph& g) {
  std::string out = "vertices";
  for (const auto& v : g.vertices()) out += " " + v;
  out += "\n";
  for (const auto& e : g.edges()) out += "edge " + g.label(e.u) + " " + g.label(e.v) + "\n";
  return out;
}

LabelAssignment parse_vertex_map(std::string_view text) {
  LabelAssignment out;
  std::size_t line_no = 0;
  for (auto line : split_lines(text)) {
    ++line_no;
    if (skippable(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens.size() != 3 || tokens[0] != "map") {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'map <source> <target>'");
    }
    out.emplace_back(tokens[1], tokens[2]);
  }
  return out;
}

std::string format_vertex_map(const LabelAssignment& assignment) {
  std::string out;
  for (const auto& [from, to] : assignment) out += "map " + from + " " + to + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace raag
