#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rminor/graph.hpp"

namespace rminor {

/// Parses one graph6 line (optional ">>graph6<<" header). Vertices are
/// 0..n-1; edges are numbered in graph6 bit order (column by column).
LabeledMultigraph parse_graph6(std::string_view line);

/// Encodes a simple graph; vertices are ranked by id. Throws on loops or
/// parallel edges.
std::string to_graph6(const LabeledMultigraph& g);

/// `{vertices:[...], edges:[{id,a,b}]}`
nlohmann::ordered_json to_json(const LabeledMultigraph& g);
LabeledMultigraph graph_from_json(const nlohmann::json& j);

/// Reads a graph file: JSON edge-list if the first non-blank character is
/// '{', otherwise the first graph6 line.
LabeledMultigraph read_graph_file(const std::string& path);

/// Reads every graph6 line of a file.
std::vector<LabeledMultigraph> read_graph6_file(const std::string& path);

}  // namespace rminor
