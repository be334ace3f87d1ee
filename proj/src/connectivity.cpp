#include <algorithm>
#include <deque>

#include "dense.hpp"
#include "rminor/graph.hpp"

namespace rminor {

using detail::bit;
using detail::Mask;

namespace {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
// Vertex v is split into in-node 2v and out-node 2v+1 joined by capacity 1.
int local_connectivity(const detail::DenseGraph& d, int s, int t) {
  const int n = d.size();
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (int v = 0; v < n; ++v) {
    for (Mask m = d.adj[v]; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      cap[2 * v + 1][2 * u] = n;
    }
  }
  const int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y) {
        if (parent[y] < 0 && cap[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int y = sink; y != source; y = parent[y]) {
      --cap[parent[y]][y];
      ++cap[y][parent[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const LabeledMultigraph& g) {
  const auto d = detail::make_dense(g);
  const int n = d.size();
  if (n == 0) return 0;
  if (!detail::induces_connected(d.adj, d.all())) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (d.adj[s] & bit(t)) continue;
      best = std::min(best, local_connectivity(d, s, t));
    }
  }
  return best;
}

bool is_three_connected(const LabeledMultigraph& g) {
  const auto d = detail::make_dense(g);
  const int n = d.size();
  if (n < 4) return false;
  const Mask all = d.all();
  if (!detail::induces_connected(d.adj, all)) return false;
  for (int a = 0; a < n; ++a) {
    if (std::popcount(d.adj[a]) < 3) return false;
    for (int b = a; b < n; ++b) {
      if (!detail::induces_connected(d.adj, all & ~bit(a) & ~bit(b))) return false;
    }
  }
  return true;
}

}  // namespace rminor
