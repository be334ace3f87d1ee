#pragma once

// Labeled multigraph kernel. Vertices and edges carry stable integer ids;
// loops and parallel edges are allowed. Every operation returns a new value.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rminor/error.hpp"

namespace rminor {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  bool is_loop() const { return a == b; }
  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool operator==(const Edge&) const = default;
};

class LabeledMultigraph {
 public:
  LabeledMultigraph() = default;

  /// Builds a graph from explicit vertex ids and (id, a, b) edge triples.
  static LabeledMultigraph from_edges(
      const std::vector<VertexId>& vertices,
      const std::vector<std::pair<EdgeId, Edge>>& edges);

  /// Simple construction helper: vertices 0..n-1, edges numbered 0.. in order.
  static LabeledMultigraph from_pairs(
      int n, const std::vector<std::pair<VertexId, VertexId>>& pairs);

  void add_vertex(VertexId v);
  void add_edge(EdgeId id, VertexId a, VertexId b);

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool has_edge(EdgeId e) const { return edges_.contains(e); }
  const Edge& edge(EdgeId e) const;

  /// Loops count twice.
  int degree(VertexId v) const;
  std::vector<EdgeId> incident_edges(VertexId v) const;
  std::set<VertexId> neighbors(VertexId v) const;

  /// Ids of all edges joining a and b (in either orientation).
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;

  bool is_simple() const;

  EdgeId next_edge_id() const;
  VertexId next_vertex_id() const;

  bool operator==(const LabeledMultigraph&) const = default;

 private:
  std::set<VertexId> vertices_;
  std::map<EdgeId, Edge> edges_;
};

/// Partition of the incident edges of `vertex` for a vertex expansion.
struct VertexSplit {
  VertexId vertex = 0;
  std::set<EdgeId> part_a;
  std::set<EdgeId> part_b;
  EdgeId new_edge = 0;

  bool operator==(const VertexSplit&) const = default;
};

// --- minor operations -------------------------------------------------------

/// Merges the endpoints of e into the smaller vertex id and removes e.
/// Parallel companions of e become loops.
LabeledMultigraph contract_edge(const LabeledMultigraph& g, EdgeId e);
LabeledMultigraph delete_edge(const LabeledMultigraph& g, EdgeId e);
LabeledMultigraph delete_vertex(const LabeledMultigraph& g, VertexId v);

/// Adds an edge between existing vertices using next_edge_id().
LabeledMultigraph add_edge(const LabeledMultigraph& g, VertexId a, VertexId b);

/// Contracts every edge of `contracted` then deletes every edge of `deleted`.
LabeledMultigraph contract_delete(const LabeledMultigraph& g,
                                  const std::set<EdgeId>& contracted,
                                  const std::set<EdgeId>& deleted);

/// Removes vertices with no incident edge.
LabeledMultigraph drop_isolated_vertices(const LabeledMultigraph& g);

struct Simplification {
  LabeledMultigraph graph;
  /// Every non-loop edge of the input mapped to the representative of its
  /// parallel class (representatives map to themselves).
  std::map<EdgeId, EdgeId> representative;
};

/// Removes loops and all but one edge of every parallel class. The smallest
/// id wins a class unless some member appears in `preferred`, in which case
/// the smallest preferred member wins.
Simplification simplify(const LabeledMultigraph& g,
                        const std::set<EdgeId>& preferred = {});

/// Inverse of contraction: replaces s.vertex by two adjacent vertices.
/// The part_a side keeps the old id; the part_b side gets next_vertex_id().
LabeledMultigraph split_vertex(const LabeledMultigraph& g, const VertexSplit& s);

/// Throws unless s is a valid split of g (both parts of size >= 2, disjoint,
/// covering exactly the non-loop incident edges of the vertex).
void validate_split(const LabeledMultigraph& g, const VertexSplit& s);

// --- structure ---------------------------------------------------------------

bool is_connected(const LabeledMultigraph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<std::set<VertexId>> connected_components(const LabeledMultigraph& g);

/// Vertex connectivity of a simple graph (K_n has connectivity n-1).
/// Computed with unit-capacity max-flow over non-adjacent vertex pairs.
int vertex_connectivity(const LabeledMultigraph& g);

/// |V| >= 4 and no vertex cut of size <= 2. Loops and parallels are ignored.
bool is_three_connected(const LabeledMultigraph& g);

/// Sorted edge-id triples forming a cycle on three distinct vertices.
std::vector<std::array<EdgeId, 3>> triangles(const LabeledMultigraph& g);

// --- isomorphism -------------------------------------------------------------

using VertexMap = std::map<VertexId, VertexId>;

/// Exact multigraph isomorphism by refinement + backtracking.
/// Optional vertex colors (keyed by vertex id) must be preserved by the map.
std::optional<VertexMap> are_isomorphic(
    const LabeledMultigraph& g1, const LabeledMultigraph& g2,
    const std::map<VertexId, int>& colors1 = {},
    const std::map<VertexId, int>& colors2 = {});

/// True when `map` is a bijection V(g1)->V(g2) preserving edge multiplicities.
bool is_isomorphism(const LabeledMultigraph& g1, const LabeledMultigraph& g2,
                    const VertexMap& map);

/// Isomorphism-invariant 64-bit fingerprint (color refinement histogram).
std::uint64_t invariant_hash(const LabeledMultigraph& g,
                             const std::map<VertexId, int>& colors = {});

}  // namespace rminor
