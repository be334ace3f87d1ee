#include <algorithm>
#include <numeric>

#include "dense.hpp"
#include "rminor/graph.hpp"

namespace rminor {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> initial_colors(const detail::DenseGraph& d,
                                const std::map<VertexId, int>& user) {
  std::vector<int> c(d.size());
  for (int v = 0; v < d.size(); ++v) {
    auto it = user.find(d.ids[v]);
    c[v] = it == user.end() ? 0 : it->second;
  }
  return c;
}

using Signature = std::pair<std::uint64_t, std::vector<std::pair<std::uint64_t, int>>>;

Signature signature(const detail::DenseGraph& d, const std::vector<std::uint64_t>& color,
                    int v) {
  Signature s{color[v], {}};
  for (int u = 0; u < d.size(); ++u) {
    if (d.mult[v][u] > 0) s.second.emplace_back(u == v ? ~std::uint64_t{0} : color[u], d.mult[v][u]);
  }
  std::sort(s.second.begin(), s.second.end());
  return s;
}

// Joint color refinement of two graphs over a shared palette. Returns false
// as soon as the color histograms disagree.
bool refine_jointly(const detail::DenseGraph& d1, const detail::DenseGraph& d2,
                    std::vector<std::uint64_t>& c1, std::vector<std::uint64_t>& c2) {
  std::size_t classes = 0;
  while (true) {
    std::map<Signature, std::uint64_t> palette;
    std::vector<Signature> s1(d1.size()), s2(d2.size());
    for (int v = 0; v < d1.size(); ++v) s1[v] = signature(d1, c1, v);
    for (int v = 0; v < d2.size(); ++v) s2[v] = signature(d2, c2, v);
    for (const auto& s : s1) palette.emplace(s, 0);
    for (const auto& s : s2) palette.emplace(s, 0);
    std::uint64_t next = 0;
    for (auto& [sig, id] : palette) id = next++;
    for (int v = 0; v < d1.size(); ++v) c1[v] = palette.at(s1[v]);
    for (int v = 0; v < d2.size(); ++v) c2[v] = palette.at(s2[v]);
    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;
    if (palette.size() == classes) return true;
    classes = palette.size();
  }
}

struct Matcher {
  const detail::DenseGraph& d1;
  const detail::DenseGraph& d2;
  const std::vector<std::uint64_t>& c1;
  const std::vector<std::uint64_t>& c2;
  std::vector<int> order;
  std::vector<int> map12, map21;

  bool consistent(int v, int w) const {
    if (c1[v] != c2[w] || map21[w] >= 0) return false;
    if (d1.mult[v][v] != d2.mult[w][w]) return false;
    for (int u = 0; u < d1.size(); ++u) {
      const int x = map12[u];
      if (x >= 0 && d1.mult[v][u] != d2.mult[w][x]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < d2.size(); ++w) {
      if (!consistent(v, w)) continue;
      map12[v] = w;
      map21[w] = v;
      if (extend(depth + 1)) return true;
      map12[v] = -1;
      map21[w] = -1;
    }
    return false;
  }
};

// Most constrained first: rarest color, then most links into the prefix.
std::vector<int> search_order(const detail::DenseGraph& d, const std::vector<std::uint64_t>& c) {
  const int n = d.size();
  std::map<std::uint64_t, int> freq;
  for (auto x : c) ++freq[x];
  std::vector<int> order;
  std::vector<bool> used(n, false);
  detail::Mask placed = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::tuple<int, int, int> best_key{};
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::tuple<int, int, int> key{std::popcount(d.adj[v] & placed), -freq[c[v]], -v};
      if (best < 0 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    used[best] = true;
    placed |= detail::bit(best);
    order.push_back(best);
  }
  return order;
}

}  // namespace

std::optional<VertexMap> are_isomorphic(const LabeledMultigraph& g1, const LabeledMultigraph& g2,
                                        const std::map<VertexId, int>& colors1,
                                        const std::map<VertexId, int>& colors2) {
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) {
    return std::nullopt;
  }
  const auto d1 = detail::make_dense(g1);
  const auto d2 = detail::make_dense(g2);
  const auto u1 = initial_colors(d1, colors1);
  const auto u2 = initial_colors(d2, colors2);
  std::vector<std::uint64_t> c1(u1.begin(), u1.end()), c2(u2.begin(), u2.end());
  if (!refine_jointly(d1, d2, c1, c2)) return std::nullopt;

  Matcher m{d1, d2, c1, c2, search_order(d1, c1), std::vector<int>(d1.size(), -1),
            std::vector<int>(d2.size(), -1)};
  if (!m.extend(0)) return std::nullopt;
  VertexMap out;
  for (int v = 0; v < d1.size(); ++v) out[d1.ids[v]] = d2.ids[m.map12[v]];
  return out;
}

bool is_isomorphism(const LabeledMultigraph& g1, const LabeledMultigraph& g2,
                    const VertexMap& map) {
  if (g1.num_vertices() != g2.num_vertices() || map.size() != g1.num_vertices()) return false;
  std::set<VertexId> image;
  for (const auto& [a, b] : map) {
    if (!g1.has_vertex(a) || !g2.has_vertex(b) || !image.insert(b).second) return false;
  }
  std::map<std::pair<VertexId, VertexId>, int> count1, count2;
  for (const auto& [id, e] : g1.edges()) {
    const VertexId a = map.at(e.a), b = map.at(e.b);
    ++count1[{std::min(a, b), std::max(a, b)}];
  }
  for (const auto& [id, e] : g2.edges()) ++count2[{e.a, e.b}];
  return count1 == count2;
}

std::uint64_t invariant_hash(const LabeledMultigraph& g, const std::map<VertexId, int>& colors) {
  const auto d = detail::make_dense(g);
  const int n = d.size();
  std::vector<std::uint64_t> c(n);
  const auto init = initial_colors(d, colors);
  for (int v = 0; v < n; ++v) c[v] = mix(static_cast<std::uint64_t>(init[v]) * 1315423911ULL + 17);
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> parts;
      for (int u = 0; u < n; ++u) {
        if (d.mult[v][u] == 0) continue;
        parts.push_back(mix((u == v ? 0x51ed27ULL : c[u]) ^ mix(static_cast<std::uint64_t>(d.mult[v][u]))));
      }
      std::sort(parts.begin(), parts.end());
      std::uint64_t h = mix(c[v]);
      for (auto p : parts) h = mix(h ^ p);
      next[v] = h;
    }
    c = std::move(next);
  }
  std::sort(c.begin(), c.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(n) ^ (g.num_edges() << 20));
  for (auto x : c) h = mix(h ^ x);
  return h;
}

}  // namespace rminor
