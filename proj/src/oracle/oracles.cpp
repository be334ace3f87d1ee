#include "oracle/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "rminor/error.hpp"

namespace rminor::oracle {

namespace {

bool is_forest(const LabeledMultigraph& g, const std::vector<EdgeId>& edges) {
  std::map<VertexId, VertexId> parent;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    return it->second = find(it->second);
  };
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    const VertexId a = find(ed.a), b = find(ed.b);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

std::optional<BruteModel> brute_force_minor(const LabeledMultigraph& host, const LabeledMultigraph& pattern,
                                            const std::set<EdgeId>& required) {
  std::vector<EdgeId> edges;
  for (const auto& [id, e] : host.edges()) edges.push_back(id);
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw Error("brute_force_minor is limited to 24 edges");
  const int k = static_cast<int>(pattern.num_edges());
  std::uint32_t req = 0;
  for (int i = 0; i < m; ++i) {
    if (required.count(edges[i])) req |= 1u << i;
  }
  if (std::popcount(req) != static_cast<int>(required.size())) return std::nullopt;
  for (std::uint32_t keep = 0; keep < (1u << m); ++keep) {
    if (std::popcount(keep) != k || (keep & req) != req) continue;
    const std::uint32_t rest = ((1u << m) - 1) & ~keep;
    // Every subset of rest, as C.
    for (std::uint32_t c = rest;; c = (c - 1) & rest) {
      std::vector<EdgeId> cv;
      std::set<EdgeId> cs, ds;
      for (int i = 0; i < m; ++i) {
        if ((c >> i) & 1) {
          cv.push_back(edges[i]);
          cs.insert(edges[i]);
        } else if ((rest >> i) & 1) {
          ds.insert(edges[i]);
        }
      }
      if (is_forest(host, cv)) {
        const auto minor = drop_isolated_vertices(contract_delete(host, cs, ds));
        if (minor.num_vertices() == pattern.num_vertices() && are_isomorphic(minor, pattern)) {
          return BruteModel{cs, ds};
        }
      }
      if (c == 0) break;
    }
  }
  return std::nullopt;
}

namespace {

// Whether the pattern embeds as a spanning subgraph of h (same vertex count)
// with the triangle's edges used for pattern edges.
bool spanning_with_triangle(const LabeledMultigraph& h, const LabeledMultigraph& pattern,
                            const std::array<EdgeId, 3>& tri) {
  const std::vector<VertexId> hv(h.vertices().begin(), h.vertices().end());
  std::vector<VertexId> pv(pattern.vertices().begin(), pattern.vertices().end());
  if (hv.size() != pv.size()) return false;
  for (EdgeId e : tri) {
    if (!h.has_edge(e) || h.edge(e).is_loop()) return false;
  }
  std::sort(pv.begin(), pv.end());
  do {
    std::map<VertexId, VertexId> to_host;
    for (std::size_t i = 0; i < hv.size(); ++i) to_host[pv[i]] = hv[i];
    bool ok = true;
    for (const auto& [id, e] : pattern.edges()) {
      if (h.edges_between(to_host[e.a], to_host[e.b]).empty()) {
        ok = false;
        break;
      }
    }
    // T's edges must join pairs that are pattern-adjacent.
    for (EdgeId t : tri) {
      if (!ok) break;
      const Edge& e = h.edge(t);
      bool adjacent = false;
      for (const auto& [pa, ha] : to_host) {
        for (const auto& [pb, hb] : to_host) {
          if (ha == e.a && hb == e.b && !pattern.edges_between(pa, pb).empty()) adjacent = true;
        }
      }
      ok = adjacent;
    }
    if (ok) return true;
  } while (std::next_permutation(pv.begin(), pv.end()));
  return false;
}

}  // namespace

bool brute_force_triangle_minor(const LabeledMultigraph& host, const LabeledMultigraph& pattern,
                                const std::array<EdgeId, 3>& triangle) {
  const std::vector<VertexId> vs(host.vertices().begin(), host.vertices().end());
  const int n = static_cast<int>(vs.size());
  const int k = static_cast<int>(pattern.num_vertices());
  if (n < k || n > 16) return false;
  std::set<VertexId> tri_vertices;
  for (EdgeId e : triangle) {
    tri_vertices.insert(host.edge(e).a);
    tri_vertices.insert(host.edge(e).b);
  }
  for (std::uint32_t r = 0; r < (1u << n); ++r) {
    bool touches = false;
    for (int i = 0; i < n; ++i) touches |= ((r >> i) & 1) && tri_vertices.count(vs[i]);
    if (touches || n - std::popcount(r) < k) continue;
    LabeledMultigraph h = host;
    for (int i = 0; i < n; ++i) {
      if ((r >> i) & 1) h = delete_vertex(h, vs[i]);
    }
    const int c = static_cast<int>(h.num_vertices()) - k;
    std::vector<EdgeId> free_edges;
    for (const auto& [id, e] : h.edges()) {
      if (std::find(triangle.begin(), triangle.end(), id) == triangle.end() && !e.is_loop()) free_edges.push_back(id);
    }
    // Every c-subset of free edges that is a forest.
    std::vector<int> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(free_edges.size());
    if (c > m) continue;
    while (true) {
      std::vector<EdgeId> cv;
      for (int i : idx) cv.push_back(free_edges[i]);
      if (is_forest(h, cv)) {
        const auto contracted = contract_delete(h, std::set<EdgeId>(cv.begin(), cv.end()), {});
        if (spanning_with_triangle(contracted, pattern, triangle)) return true;
      }
      int i = c - 1;
      while (i >= 0 && idx[i] == m - c + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

int brute_force_connectivity(const LabeledMultigraph& g) {
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  const int n = static_cast<int>(vs.size());
  if (n > 20) throw Error("brute_force_connectivity is limited to 20 vertices");
  auto connected_without = [&](std::uint32_t removed) {
    std::set<VertexId> keep;
    for (int i = 0; i < n; ++i) {
      if (!((removed >> i) & 1)) keep.insert(vs[i]);
    }
    if (keep.empty()) return true;
    std::set<VertexId> seen{*keep.begin()};
    std::vector<VertexId> stack{*keep.begin()};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (keep.count(w) && seen.insert(w).second) stack.push_back(w);
      }
    }
    return seen.size() == keep.size();
  };
  for (int size = 0; size <= n - 2; ++size) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (std::popcount(s) == size && !connected_without(s)) return size;
    }
  }
  return std::max(n - 1, 0);
}

std::vector<std::array<EdgeId, 3>> brute_force_triangles(const LabeledMultigraph& g) {
  std::vector<std::pair<EdgeId, Edge>> es(g.edges().begin(), g.edges().end());
  std::vector<std::array<EdgeId, 3>> out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      for (std::size_t k = j + 1; k < es.size(); ++k) {
        std::map<VertexId, int> deg;
        bool loop = false;
        for (const auto* e : {&es[i].second, &es[j].second, &es[k].second}) {
          loop |= e->is_loop();
          ++deg[e->a];
          ++deg[e->b];
        }
        if (loop || deg.size() != 3) continue;
        if (std::all_of(deg.begin(), deg.end(), [](const auto& p) { return p.second == 2; })) {
          out.push_back({es[i].first, es[j].first, es[k].first});
        }
      }
    }
  }
  return out;
}

namespace {

struct CycleType {
  std::vector<int> perm;  // a representative permutation
  std::uint64_t class_size = 0;
};

// All integer partitions of n, each with a representative permutation and
// the size of its conjugacy class n! / prod(k^m_k m_k!).
std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      CycleType t;
      t.perm.resize(n);
      int start = 0;
      std::uint64_t denom = 1;
      std::map<int, int> mult;
      for (int p : parts) {
        for (int i = 0; i < p; ++i) t.perm[start + i] = start + (i + 1) % p;
        start += p;
        denom *= p;
        ++mult[p];
      }
      for (const auto& [p, m] : mult) {
        for (int i = 2; i <= m; ++i) denom *= i;
      }
      t.class_size = fact / denom;
      out.push_back(std::move(t));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Orbits of a permutation acting on unordered vertex pairs, each as a mask
// over the pair index i*n+j bits of an adjacency representation.
std::vector<std::vector<std::pair<int, int>>> pair_orbits(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (seen.count({a, b})) continue;
      std::vector<std::pair<int, int>> orbit;
      std::pair<int, int> p{a, b};
      while (seen.insert(p).second) {
        orbit.push_back(p);
        int x = perm[p.first], y = perm[p.second];
        p = {std::min(x, y), std::max(x, y)};
      }
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

// 3-connectivity on adjacency bitmasks by removing every set of at most two
// vertices; kept independent of the library implementation.
bool three_connected_masks(const std::vector<std::uint32_t>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n < 4) return false;
  const std::uint32_t all = (1u << n) - 1;
  auto connected = [&](std::uint32_t alive) {
    if (!alive) return true;
    std::uint32_t seen = alive & -alive, frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t next = adj[v] & alive & ~seen;
      seen |= next;
      frontier |= next;
    }
    return seen == alive;
  };
  if (!connected(all)) return false;
  for (int a = 0; a < n; ++a) {
    if (!connected(all & ~(1u << a))) return false;
    for (int b = a + 1; b < n; ++b) {
      if (!connected(all & ~(1u << a) & ~(1u << b))) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t burnside_graph_count(int n) {
  if (n < 0 || n > 12) throw Error("burnside_graph_count supports 0..12 vertices");
  if (n <= 1) return 1;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  // Sums can exceed 64 bits for larger n; unsigned __int128 keeps them exact.
  unsigned __int128 total = 0;
  for (const auto& t : cycle_types(n)) {
    total += static_cast<unsigned __int128>(t.class_size) << pair_orbits(t.perm).size();
  }
  return static_cast<std::uint64_t>(total / fact);
}

std::uint64_t burnside_three_connected_count(int n) {
  if (n < 0 || n > 7) throw Error("burnside_three_connected_count supports 0..7 vertices");
  if (n < 4) return 0;
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  std::uint64_t total = 0;
  for (const auto& t : cycle_types(n)) {
    const auto orbits = pair_orbits(t.perm);
    const int k = static_cast<int>(orbits.size());
    std::uint64_t fixed = 0;
    for (std::uint32_t choice = 0; choice < (1u << k); ++choice) {
      std::vector<std::uint32_t> adj(n, 0);
      for (int i = 0; i < k; ++i) {
        if (!((choice >> i) & 1)) continue;
        for (const auto& [a, b] : orbits[i]) {
          adj[a] |= 1u << b;
          adj[b] |= 1u << a;
        }
      }
      if (three_connected_masks(adj)) ++fixed;
    }
    total += fixed * t.class_size;
  }
  return total / fact;
}

}  // namespace rminor::oracle
