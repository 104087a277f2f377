#pragma once

#include "lambdacol/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace lambdacol {

class Colouring;

// Graph files:
//
//   # comment
//   p <n> [<m>]
//   e <u> <v>        (0 <= u < v < n), exactly m lines when m is given
//
// Colouring files: one `c <vertex> <label>` line per vertex, any order.

Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Colouring parse_colouring(std::string_view text, int n);
std::string format_colouring(const Colouring& c);

/// `v <vertex> <class>` lines.
std::string format_class_assignment(const std::vector<int>& class_of);
/// `map <old> <new>` lines.
std::string format_injection(const std::vector<Vertex>& injection);

std::string read_file(const std::string& path);

} // namespace lambdacol
