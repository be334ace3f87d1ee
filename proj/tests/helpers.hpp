#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "rminor/catalog.hpp"
#include "rminor/graph.hpp"

namespace testing {

using namespace rminor;

inline LabeledMultigraph complete(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  return LabeledMultigraph::from_pairs(n, pairs);
}

inline LabeledMultigraph cycle(int n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return LabeledMultigraph::from_pairs(n, pairs);
}

inline LabeledMultigraph petersen() {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i, i + 5);
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return LabeledMultigraph::from_pairs(10, pairs);
}

inline LabeledMultigraph icosahedron() {
  // Two poles, an upper and a lower pentagon, joined as an antiprism.
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(0, 1 + i);
    pairs.emplace_back(11, 6 + i);
    pairs.emplace_back(1 + i, 1 + (i + 1) % 5);
    pairs.emplace_back(6 + i, 6 + (i + 1) % 5);
    pairs.emplace_back(1 + i, 6 + i);
    pairs.emplace_back(1 + (i + 1) % 5, 6 + i);
  }
  return LabeledMultigraph::from_pairs(12, pairs);
}

inline LabeledMultigraph wheel(int spokes) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int i = 1; i <= spokes; ++i) {
    pairs.emplace_back(0, i);
    pairs.emplace_back(i, i % spokes + 1);
  }
  return LabeledMultigraph::from_pairs(spokes + 1, pairs);
}

/// Same graph with vertex ids permuted and edge ids shuffled.
inline LabeledMultigraph relabel(const LabeledMultigraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::vector<VertexId> perm = vs;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < vs.size(); ++i) to[vs[i]] = perm[i] + 100;
  std::vector<EdgeId> ids;
  for (const auto& [id, e] : g.edges()) ids.push_back(id + 1000);
  std::shuffle(ids.begin(), ids.end(), rng);
  LabeledMultigraph out;
  for (VertexId v : vs) out.add_vertex(to[v]);
  std::size_t k = 0;
  for (const auto& [id, e] : g.edges()) out.add_edge(ids[k++], to[e.a], to[e.b]);
  return out;
}

inline LabeledMultigraph random_simple(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) pairs.emplace_back(a, b);
    }
  }
  return LabeledMultigraph::from_pairs(n, pairs);
}

inline LabeledMultigraph cat(const char* name) { return catalog::build(name).graph; }

}  // namespace testing
