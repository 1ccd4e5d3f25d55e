#pragma once

#include "phee/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace phee {

struct LoadReport {
    std::size_t lines = 0;       // non-comment, non-blank lines parsed
    std::size_t self_loops = 0;  // dropped as edges (the vertex id still registers)
    std::size_t duplicates = 0;  // repeated pairs; (a,b) == (b,a) when undirected
};

// Whitespace-separated "a b" pairs, one per line. '#'/'%' lines and blank
// lines are skipped. Vertex ids are arbitrary int64 labels; internal ids are
// assigned in order of first appearance. A self-loop line "v v" registers v
// (that is how isolated vertices are encoded) but adds no edge. Malformed
// lines throw with the 1-based line number. An input with no vertices throws.
Graph load_edge_list(std::istream& in, bool directed, LoadReport* report = nullptr);

// File variant; reads through zlib, so both plain text and gzip-compressed
// files work regardless of extension.
Graph load_edge_list_file(const std::string& path, bool directed, LoadReport* report = nullptr);

// Inverse of the loader: original labels, one edge per line (u < v once for
// undirected, every arc for directed), then "v v" lines for isolated
// vertices so the round trip preserves the vertex set.
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace phee
