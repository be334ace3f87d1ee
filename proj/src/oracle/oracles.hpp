#pragma once

// Brute-force reference implementations used only by tests and the
// acceptance runner. They rely on graph-core primitives and exhaustive
// enumeration, never on the minor search or the generators.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor::oracle {

struct BruteModel {
  std::set<EdgeId> contracted;
  std::set<EdgeId> deleted;
};

/// Enumerates the kept edge set K (|K| = |E(pattern)|, required ⊆ K), every
/// forest C in E - K, and D = E - K - C.
std::optional<BruteModel> brute_force_minor(const LabeledMultigraph& host, const LabeledMultigraph& pattern,
                                            const std::set<EdgeId>& required = {});

/// Whether some minor of host isomorphic to pattern keeps the triangle T as a
/// pattern triangle. Enumerates deleted vertex sets R (avoiding T), forests C
/// of size n - |R| - |V(pattern)| in host - R avoiding T, and every vertex
/// bijection onto the pattern. Practical for hosts up to about 9 vertices.
bool brute_force_triangle_minor(const LabeledMultigraph& host, const LabeledMultigraph& pattern,
                                const std::array<EdgeId, 3>& triangle);

/// Minimum vertex cut by subset enumeration; n - 1 for complete graphs.
int brute_force_connectivity(const LabeledMultigraph& g);

/// Every triple of edges forming a triangle, sorted.
std::vector<std::array<EdgeId, 3>> brute_force_triangles(const LabeledMultigraph& g);

/// Number of simple graphs on n unlabeled vertices, by Burnside's lemma over
/// the action of S_n on vertex pairs.
std::uint64_t burnside_graph_count(int n);

/// Number of 3-connected simple graphs on n unlabeled vertices: Burnside
/// over cycle types, counting fixed labeled graphs that are 3-connected.
/// Exhaustive over 2^(n choose 2) labeled graphs; intended for n <= 7.
std::uint64_t burnside_three_connected_count(int n);

}  // namespace rminor::oracle
