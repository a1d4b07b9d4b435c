#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// Graph text format:
//   vertices <label> <label> ...
//   edge <label> <label>
// `#` starts a comment line, blank lines are skipped.

/// Syntax only; call validate_graph on the result for the invariants.
GraphDescription parse_graph_description(std::string_view text);
/// Parses and validates (ParseError / DomainError).
SimplicialGraph parse_graph(std::string_view text);
std::string format_graph(const SimplicialGraph& g);

// Vertex maps: one `map <source> <target>` line per source vertex.
LabelAssignment parse_vertex_map(std::string_view text);
std::string format_vertex_map(const LabelAssignment& assignment);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

/// Splits on ASCII whitespace.
std::vector<std::string> split_tokens(std::string_view line);
/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace raag
