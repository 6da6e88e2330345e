#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_gate/graph.hpp"

namespace spectral_gate {

// Decodes one graph6 line, or one sparse6 line (leading ':'). An optional
// ">>graph6<<" / ">>sparse6<<" header and a trailing newline are accepted.
// Throws MalformedEncoding with the byte offset of the first bad byte, and
// LoopEdge if a sparse6 line encodes a loop.
Multigraph parse_graph6(std::string_view line);

// Throws DomainError if g has parallel edges.
std::string encode_graph6(const Multigraph& g);
std::string encode_sparse6(const Multigraph& g);
// graph6 for simple graphs, sparse6 otherwise.
std::string encode_graph(const Multigraph& g);

// One graph per non-empty line. Errors carry the line number in the message.
std::vector<Multigraph> read_graph_file(const std::filesystem::path& path);

}  // namespace spectral_gate
