#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor::catalog {

/// A named graph with its published vertex labels (roles such as "u1", "w2").
struct Entry {
  std::string name;
  LabeledMultigraph graph;
  std::map<std::string, VertexId> labels;

  VertexId vertex(const std::string& role) const;
  /// The unique edge joining two labeled vertices.
  EdgeId edge(const std::string& role_a, const std::string& role_b) const;
};

/// Throws Error listing the valid names when `name` is unknown.
Entry build(std::string_view name);

/// All names, in a fixed order.
const std::vector<std::string>& names();

bool contains(std::string_view name);

}  // namespace rminor::catalog
