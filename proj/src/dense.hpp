#pragma once

// Dense index view of a LabeledMultigraph used by the search kernels.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor::detail {

using Mask = std::uint64_t;
inline constexpr int kMaxDense = 64;

inline Mask bit(int i) { return Mask{1} << i; }

struct DenseGraph {
  std::vector<VertexId> ids;           // dense index -> vertex id
  std::map<VertexId, int> index;       // vertex id -> dense index
  std::vector<Mask> adj;               // simple adjacency, loops ignored
  std::vector<std::vector<int>> mult;  // multiplicities, loops on the diagonal

  int size() const { return static_cast<int>(ids.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }
};

inline DenseGraph make_dense(const LabeledMultigraph& g) {
  if (g.num_vertices() > static_cast<std::size_t>(kMaxDense)) {
    throw Error("graph too large for dense kernels (more than 64 vertices)");
  }
  DenseGraph d;
  for (VertexId v : g.vertices()) {
    d.index[v] = d.size();
    d.ids.push_back(v);
  }
  const int n = d.size();
  d.adj.assign(n, 0);
  d.mult.assign(n, std::vector<int>(n, 0));
  for (const auto& [id, e] : g.edges()) {
    const int a = d.index.at(e.a), b = d.index.at(e.b);
    if (a == b) {
      ++d.mult[a][a];
      continue;
    }
    ++d.mult[a][b];
    ++d.mult[b][a];
    d.adj[a] |= bit(b);
    d.adj[b] |= bit(a);
  }
  return d;
}

/// Vertices reachable from `start` inside `allowed`.
inline Mask reach(const std::vector<Mask>& adj, int start, Mask allowed) {
  Mask seen = bit(start), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// True when `set` induces a connected subgraph (empty counts as connected).
inline bool induces_connected(const std::vector<Mask>& adj, Mask set) {
  if (!set) return true;
  return reach(adj, std::countr_zero(set), set) == set;
}

}  // namespace rminor::detail
