#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "strongk/digraph.hpp"

namespace strongk {

/// Digraph text format (bit-exact): line 1 "n m"; then m lines "u v"
/// (0-indexed, ASCII decimal, LF-terminated).  The reader rejects loops and
/// duplicate arcs with line-numbered ParseErrors.
Digraph read_digraph(std::istream& in, const std::string& source = "<input>");
Digraph read_digraph_file(const std::string& path);
std::string write_digraph(const Digraph& d);
void write_digraph_file(const Digraph& d, const std::string& path);

/// "0,1,2" -> {0, 1, 2}
std::vector<int> parse_vertex_list(const std::string& text);

/// DOT export, deterministic ordering.
std::string to_dot(const Digraph& d, const std::string& name = "D");

} // namespace strongk
