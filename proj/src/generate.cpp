#include "rminor/generate.hpp"

#include <unordered_map>

#include "rminor/catalog.hpp"
#include "rminor/error.hpp"

namespace rminor {

namespace {

struct Classes {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<LabeledMultigraph> graphs;

  void insert(LabeledMultigraph g) {
    auto& bucket = buckets[invariant_hash(g)];
    for (std::size_t i : bucket) {
      if (are_isomorphic(graphs[i], g)) return;
    }
    bucket.push_back(graphs.size());
    graphs.push_back(std::move(g));
  }
};

}  // namespace

std::vector<LabeledMultigraph> all_simple_graphs(int n) {
  if (n < 0 || n > 10) throw Error("all_simple_graphs supports 0..10 vertices");
  std::vector<LabeledMultigraph> out;
  std::vector<LabeledMultigraph> level{LabeledMultigraph::from_pairs(n, {})};
  while (!level.empty()) {
    Classes next;
    for (const auto& g : level) {
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
          if (g.edges_between(a, b).empty()) next.insert(add_edge(g, a, b));
        }
      }
    }
    for (auto& g : level) out.push_back(std::move(g));
    level = std::move(next.graphs);
  }
  return out;
}

std::vector<LabeledMultigraph> three_connected_graphs(int n) {
  std::vector<LabeledMultigraph> out;
  for (auto& g : all_simple_graphs(n)) {
    if (is_three_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

namespace {

EdgeId random_edge(Rng& rng, const LabeledMultigraph& g) {
  auto it = g.edges().begin();
  std::advance(it, uniform(rng, 0, static_cast<int>(g.num_edges()) - 1));
  return it->first;
}

VertexId random_vertex(Rng& rng, const LabeledMultigraph& g) {
  auto it = g.vertices().begin();
  std::advance(it, uniform(rng, 0, static_cast<int>(g.num_vertices()) - 1));
  return *it;
}

LabeledMultigraph subdivide(const LabeledMultigraph& g, EdgeId e) {
  const Edge ed = g.edge(e);
  LabeledMultigraph h = delete_edge(g, e);
  const VertexId m = h.next_vertex_id();
  h.add_vertex(m);
  h = add_edge(h, ed.a, m);
  return add_edge(h, m, ed.b);
}

std::vector<std::pair<VertexId, VertexId>> non_edges(const LabeledMultigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId a : g.vertices()) {
    for (VertexId b : g.vertices()) {
      if (a < b && g.edges_between(a, b).empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

bool add_random_non_edge(Rng& rng, LabeledMultigraph& g) {
  const auto missing = non_edges(g);
  if (missing.empty()) return false;
  const auto [a, b] = missing[uniform(rng, 0, static_cast<int>(missing.size()) - 1)];
  g = add_edge(g, a, b);
  return true;
}

}  // namespace

LabeledMultigraph random_nonplanar_three_connected(Rng& rng, int max_vertices) {
  if (max_vertices < 6) throw Error("max_vertices must be at least 6");
  while (true) {
    const bool k5 = uniform(rng, 0, 1) == 0;
    LabeledMultigraph g = catalog::build(k5 ? "K5" : "K33").graph;
    const int n = uniform(rng, static_cast<int>(g.num_vertices()), max_vertices);
    while (static_cast<int>(g.num_vertices()) < n) g = subdivide(g, random_edge(rng, g));
    while (!is_three_connected(g)) {
      if (!add_random_non_edge(rng, g)) break;
    }
    for (int extra = uniform(rng, 0, 3); extra > 0; --extra) add_random_non_edge(rng, g);
    if (g.is_simple() && is_three_connected(g)) return g;
  }
}

LabeledMultigraph random_host(Rng& rng, int max_edges) {
  static const std::vector<std::string> seeds = {"K33", "K33_01", "K33_02", "K33_11", "K5", "G1", "G3"};
  LabeledMultigraph g;
  if (uniform(rng, 0, 1) == 0) {
    g = catalog::build(seeds[uniform(rng, 0, static_cast<int>(seeds.size()) - 1)]).graph;
    for (int steps = uniform(rng, 0, 3); steps > 0; --steps) {
      const int room = max_edges - static_cast<int>(g.num_edges());
      if (room <= 0) break;
      switch (uniform(rng, 0, 2)) {
        case 0:
          g = subdivide(g, random_edge(rng, g));
          break;
        case 1:
          add_random_non_edge(rng, g);
          break;
        default: {
          const VertexId v = random_vertex(rng, g);
          const auto inc = g.incident_edges(v);
          if (inc.size() < 4) break;
          VertexSplit s{v, {inc[0], inc[1]}, {inc[2], inc[3]}, g.next_edge_id()};
          for (std::size_t i = 4; i < inc.size(); ++i) (uniform(rng, 0, 1) ? s.part_a : s.part_b).insert(inc[i]);
          g = split_vertex(g, s);
        }
      }
    }
    // Trim to the edge budget by deleting random edges.
    while (static_cast<int>(g.num_edges()) > max_edges) g = delete_edge(g, random_edge(rng, g));
  } else {
    const int n = uniform(rng, 4, 8);
    const int m = uniform(rng, n - 1, max_edges);
    g = LabeledMultigraph::from_pairs(n, {});
    // A random spanning tree keeps the host connected.
    for (VertexId v = 1; v < n; ++v) g = add_edge(g, uniform(rng, 0, v - 1), v);
    while (static_cast<int>(g.num_edges()) < m) {
      if (uniform(rng, 0, 9) == 0) {
        g = add_edge(g, random_vertex(rng, g), random_vertex(rng, g));  // may be a loop or parallel
      } else if (!add_random_non_edge(rng, g)) {
        break;
      }
    }
  }
  return drop_isolated_vertices(g);
}

}  // namespace rminor
