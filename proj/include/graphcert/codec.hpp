#pragma once

#include <string>
#include <string_view>

#include "graphcert/graph.hpp"

namespace graphcert {

// edge_list: "n m\n" followed by one "u v\n" line per edge (decoding accepts
// any whitespace between the 2 + 2m integers).
// graph6: standard one-line ASCII encoding of the upper adjacency triangle.
enum class GraphFormat { edge_list, graph6 };

std::string encode_graph(const Graph& g, GraphFormat format);

// Strict: every violation reports the byte offset of the offending token.
// An optional trailing newline is tolerated in both formats.
Graph decode_graph(std::string_view text, GraphFormat format);

// Chosen by extension: ".el" or ".g6".
GraphFormat format_for_path(const std::string& path);
Graph load_graph_file(const std::string& path);

}  // namespace graphcert
