// Branch-set search: enumerate partitions of a connected host component into
// k connected blocks (restricted-growth order, so each unlabeled partition is
// visited once), then look for a bijection pattern -> blocks under which every
// pattern edge is realised between its blocks and every required edge joins
// blocks whose pattern vertices are adjacent.

#include <algorithm>
#include <functional>
#include <numeric>

#include "dense.hpp"
#include "rminor/catalog.hpp"
#include "rminor/minor.hpp"

namespace rminor {

using detail::bit;
using detail::Mask;

namespace {

struct DensePattern {
  const Pattern* source = nullptr;
  int k = 0;
  int num_edges = 0;
  int min_degree = 0;
  std::vector<VertexId> ids;
  std::vector<Mask> adj;
  std::vector<int> order;         // highest degree first
  std::vector<int> degrees_desc;  // sorted degree sequence
};

DensePattern densify(const Pattern& p) {
  if (!p.graph.is_simple()) throw Error("pattern " + p.name + " must be simple");
  if (p.graph.num_edges() == 0 || !is_connected(p.graph)) {
    throw Error("pattern " + p.name + " must be connected with at least one edge");
  }
  const auto d = detail::make_dense(p.graph);
  DensePattern out;
  out.source = &p;
  out.k = d.size();
  out.num_edges = static_cast<int>(p.graph.num_edges());
  out.ids = d.ids;
  out.adj = d.adj;
  out.order.resize(out.k);
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](int a, int b) {
    return std::popcount(d.adj[a]) > std::popcount(d.adj[b]);
  });
  for (int v = 0; v < out.k; ++v) out.degrees_desc.push_back(std::popcount(d.adj[v]));
  std::sort(out.degrees_desc.rbegin(), out.degrees_desc.rend());
  out.min_degree = out.degrees_desc.back();
  return out;
}

struct Match {
  std::vector<int> block_of;  // host dense vertex -> block
  std::vector<int> sigma;     // pattern dense vertex -> block
};

class PartitionSearch {
 public:
  PartitionSearch(const detail::DenseGraph& host, const std::vector<std::pair<int, int>>& required,
                  std::vector<const DensePattern*> group, std::size_t stop_at, std::vector<std::optional<Match>>& found,
                  std::uint64_t& nodes, std::uint64_t& leaves, std::uint64_t cap)
      : host_(host),
        n_(host.size()),
        k_(group.front()->k),
        group_(std::move(group)),
        stop_at_(stop_at),
        found_(found),
        nodes_(nodes),
        leaves_(leaves),
        cap_(cap) {
    min_degree_ = k_;
    for (const auto* p : group_) min_degree_ = std::min(min_degree_, p->min_degree);
    required_at_.assign(n_, {});
    for (const auto& [a, b] : required) {
      required_at_[a].push_back(b);
      required_at_[b].push_back(a);
    }
    order_ = vertex_order(required);
    block_of_.assign(n_, -1);
    blocks_.assign(k_, 0);
    pair_used_.assign(k_ * k_, 0);
    unassigned_ = host_.all();
  }

  void run() { assign(0); }

 private:
  std::vector<int> vertex_order(const std::vector<std::pair<int, int>>& required) const {
    // BFS seeded at the required-edge endpoints, lowest index first.
    std::vector<int> seeds;
    for (const auto& [a, b] : required) {
      seeds.push_back(a);
      seeds.push_back(b);
    }
    seeds.push_back(0);
    std::vector<int> order;
    Mask seen = 0;
    std::vector<int> queue;
    for (int s : seeds) {
      if (seen & bit(s)) continue;
      seen |= bit(s);
      queue.push_back(s);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      order.push_back(v);
      for (Mask m = host_.adj[v] & ~seen; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        seen |= bit(u);
        queue.push_back(u);
      }
    }
    return order;
  }

  Mask neighborhood(Mask set) const {
    Mask out = 0;
    for (Mask m = set; m; m &= m - 1) out |= host_.adj[std::countr_zero(m)];
    return out & ~set;
  }

  bool feasible(int pos, int open) const {
    if (open + (n_ - pos - 1) < k_) return false;
    for (int c = 0; c < open; ++c) {
      const Mask members = blocks_[c];
      if (!members) continue;
      if ((detail::reach(host_.adj, std::countr_zero(members), members | unassigned_) & members) != members) {
        return false;
      }
      const Mask around = neighborhood(members);
      if (around & unassigned_) continue;
      int touching = 0;
      for (int d = 0; d < open; ++d) {
        if (d != c && (around & blocks_[d])) ++touching;
      }
      // A closed block already knows all its neighbours, but blocks still to
      // be opened can only attach through unassigned vertices.
      if (touching < min_degree_) return false;
    }
    return true;
  }

  // Required edges at v must cross distinct, not yet used block pairs.
  bool required_ok(int v, int b, std::vector<int>& marked) {
    for (int u : required_at_[v]) {
      const int c = block_of_[u];
      if (c < 0) continue;
      if (c == b) return false;
      const int key = std::min(b, c) * k_ + std::max(b, c);
      if (pair_used_[key]) return false;
      pair_used_[key] = 1;
      marked.push_back(key);
    }
    return true;
  }

  void assign(int pos) {
    if (stopped_) return;
    if (pos == n_) {
      if (open_ == k_) leaf();
      return;
    }
    const int v = order_[pos];
    const int limit = std::min(open_ + 1, k_);
    for (int b = 0; b < limit; ++b) {
      if (++nodes_ > cap_) {
        throw SearchBudgetExceeded("minor search exceeded the node cap of " + std::to_string(cap_));
      }
      std::vector<int> marked;
      const int previous_open = open_;
      block_of_[v] = b;
      blocks_[b] |= bit(v);
      unassigned_ &= ~bit(v);
      open_ = std::max(open_, b + 1);
      if (required_ok(v, b, marked) && feasible(pos, open_)) assign(pos + 1);
      for (int key : marked) pair_used_[key] = 0;
      open_ = previous_open;
      unassigned_ |= bit(v);
      blocks_[b] &= ~bit(v);
      block_of_[v] = -1;
      if (stopped_) return;
    }
  }

  void leaf() {
    ++leaves_;
    std::vector<Mask> quotient(k_, 0);
    for (int c = 0; c < k_; ++c) {
      const Mask around = neighborhood(blocks_[c]);
      for (int d = 0; d < k_; ++d) {
        if (d != c && (around & blocks_[d])) quotient[c] |= bit(d);
      }
    }
    int quotient_edges = 0;
    std::vector<int> qdeg(k_);
    for (int c = 0; c < k_; ++c) {
      qdeg[c] = std::popcount(quotient[c]);
      quotient_edges += qdeg[c];
    }
    quotient_edges /= 2;
    std::vector<int> qdeg_desc = qdeg;
    std::sort(qdeg_desc.rbegin(), qdeg_desc.rend());

    for (std::size_t i = 0; i < group_.size(); ++i) {
      if (found_[i]) continue;
      const DensePattern& p = *group_[i];
      if (quotient_edges < p.num_edges) continue;
      bool dominated = true;
      for (int j = 0; j < k_ && dominated; ++j) dominated = qdeg_desc[j] >= p.degrees_desc[j];
      if (!dominated) continue;
      std::vector<int> sigma(k_, -1), inverse(k_, -1);
      if (match(p, quotient, qdeg, 0, sigma, inverse)) {
        found_[i] = Match{block_of_, sigma};
        if (i == stop_at_) {
          stopped_ = true;
          return;
        }
      }
    }
  }

  bool match(const DensePattern& p, const std::vector<Mask>& quotient, const std::vector<int>& qdeg,
             int depth, std::vector<int>& sigma, std::vector<int>& inverse) const {
    if (depth == k_) return true;
    const int pv = p.order[depth];
    const int need = std::popcount(p.adj[pv]);
    for (int c = 0; c < k_; ++c) {
      if (inverse[c] >= 0 || qdeg[c] < need) continue;
      bool ok = true;
      for (int pu = 0; pu < k_ && ok; ++pu) {
        const int d = sigma[pu];
        if (d < 0) continue;
        const bool pattern_edge = p.adj[pv] & bit(pu);
        if (pattern_edge && !(quotient[c] & bit(d))) ok = false;
        if (!pattern_edge && pair_used_[std::min(c, d) * k_ + std::max(c, d)]) ok = false;
      }
      if (!ok) continue;
      sigma[pv] = c;
      inverse[c] = pv;
      if (match(p, quotient, qdeg, depth + 1, sigma, inverse)) return true;
      sigma[pv] = -1;
      inverse[c] = -1;
    }
    return false;
  }

  const detail::DenseGraph& host_;
  const int n_;
  const int k_;
  std::vector<const DensePattern*> group_;
  const std::size_t stop_at_;
  std::vector<std::optional<Match>>& found_;
  std::uint64_t& nodes_;
  std::uint64_t& leaves_;
  const std::uint64_t cap_;

  int min_degree_ = 0;
  std::vector<std::vector<int>> required_at_;
  std::vector<int> order_;
  std::vector<int> block_of_;
  std::vector<Mask> blocks_;
  std::vector<char> pair_used_;
  Mask unassigned_ = 0;
  int open_ = 0;
  bool stopped_ = false;
};

struct Component {
  LabeledMultigraph graph;  // induced on the component
  detail::DenseGraph dense;
};

MinorModel build_model(const LabeledMultigraph& host, const Component& comp, const DensePattern& p,
                       const Match& match, const std::set<EdgeId>& required) {
  const auto& d = comp.dense;
  const int k = p.k;
  std::vector<std::vector<int>> members(k);
  for (int v = 0; v < d.size(); ++v) members[match.block_of[v]].push_back(v);

  std::set<EdgeId> kept;
  std::set<EdgeId> contracted;
  std::map<std::pair<int, int>, std::vector<EdgeId>> between;  // dense pair -> sorted ids
  for (const auto& [id, e] : comp.graph.edges()) {
    if (e.is_loop()) continue;
    between[{d.index.at(e.a), d.index.at(e.b)}].push_back(id);
  }

  // Spanning tree of each block: BFS from its smallest vertex, smallest ids.
  for (int c = 0; c < k; ++c) {
    Mask block = 0;
    for (int v : members[c]) block |= bit(v);
    Mask seen = bit(members[c].front());
    std::vector<int> queue{members[c].front()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (Mask m = d.adj[v] & block & ~seen; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        seen |= bit(u);
        queue.push_back(u);
        contracted.insert(between.at({std::min(u, v), std::max(u, v)}).front());
      }
    }
  }

  // One representative host edge per pattern edge, preferring required edges.
  for (int pu = 0; pu < k; ++pu) {
    for (int pv = pu + 1; pv < k; ++pv) {
      if (!(p.adj[pu] & bit(pv))) continue;
      const int a = match.sigma[pu], b = match.sigma[pv];
      std::optional<EdgeId> pick;
      for (int x : members[a]) {
        for (int y : members[b]) {
          auto it = between.find({std::min(x, y), std::max(x, y)});
          if (it == between.end()) continue;
          for (EdgeId id : it->second) {
            if (required.contains(id)) {
              pick = id;
            } else if (!pick || (!required.contains(*pick) && id < *pick)) {
              pick = id;
            }
          }
        }
      }
      kept.insert(*pick);
    }
  }

  MinorModel model;
  model.pattern = p.source->name;
  model.contracted = contracted;
  for (const auto& [id, e] : host.edges()) {
    if (!kept.contains(id) && !contracted.contains(id)) model.deleted.insert(id);
  }
  for (int pv = 0; pv < k; ++pv) {
    const int c = match.sigma[pv];
    model.iso[d.ids[members[c].front()]] = p.ids[pv];
  }
  return model;
}

std::vector<Component> components_of(const LabeledMultigraph& host) {
  std::vector<Component> out;
  for (const auto& vs : connected_components(host)) {
    Component comp;
    for (VertexId v : vs) comp.graph.add_vertex(v);
    for (const auto& [id, e] : host.edges()) {
      if (vs.contains(e.a)) comp.graph.add_edge(id, e.a, e.b);
    }
    comp.dense = detail::make_dense(comp.graph);
    out.push_back(std::move(comp));
  }
  return out;
}

void check_required(const LabeledMultigraph& host, const std::set<EdgeId>& required) {
  for (EdgeId e : required) {
    if (!host.has_edge(e)) throw Error("required edge " + std::to_string(e) + " is not an edge of the host");
  }
}

std::optional<MinorModel> search(const LabeledMultigraph& host, const std::vector<Pattern>& family,
                                 const std::set<EdgeId>& required, const SearchOptions& options) {
  check_required(host, required);
  if (family.empty()) return std::nullopt;
  if (host.num_vertices() > static_cast<std::size_t>(detail::kMaxDense)) {
    throw Error("host too large: at most 64 vertices are supported");
  }
  std::vector<DensePattern> patterns;
  for (const auto& p : family) patterns.push_back(densify(p));

  SearchStats local;
  SearchStats& stats = options.stats ? *options.stats : local;

  // Required edges pin the component; loops and parallel pairs can never all be kept.
  std::set<std::pair<VertexId, VertexId>> required_ends;
  for (EdgeId e : required) {
    const Edge& edge = host.edge(e);
    if (edge.is_loop() || !required_ends.emplace(edge.a, edge.b).second) return std::nullopt;
  }
  const auto comps = components_of(host);

  // cache[i]: unset = not searched yet; set to nullopt-Match = searched, absent.
  std::vector<std::optional<std::optional<Match>>> cache(patterns.size());
  std::vector<int> match_comp(patterns.size(), -1);

  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (!cache[i]) {
      std::vector<std::size_t> members;
      for (std::size_t j = i; j < patterns.size(); ++j) {
        if (!cache[j] && patterns[j].k == patterns[i].k) members.push_back(j);
      }
      std::vector<std::optional<Match>> hits(members.size());
      std::vector<int> hit_comp(members.size(), -1);
      for (std::size_t ci = 0; ci < comps.size() && !hits[0]; ++ci) {
        const auto& comp = comps[ci];
        std::vector<std::pair<int, int>> dense_required;
        bool all_inside = true;
        for (EdgeId e : required) {
          const Edge& edge = host.edge(e);
          if (!comp.graph.has_vertex(edge.a)) {
            all_inside = false;
            break;
          }
          dense_required.emplace_back(comp.dense.index.at(edge.a), comp.dense.index.at(edge.b));
        }
        if (!all_inside || comp.dense.size() < patterns[i].k) continue;
        std::vector<const DensePattern*> group;
        std::vector<std::size_t> slot;
        for (std::size_t m = 0; m < members.size(); ++m) {
          if (hits[m]) continue;
          group.push_back(&patterns[members[m]]);
          slot.push_back(m);
        }
        std::vector<std::optional<Match>> found(group.size());
        PartitionSearch s(comp.dense, dense_required, group, 0, found, stats.nodes, stats.leaves,
                          options.node_cap);
        s.run();
        for (std::size_t g = 0; g < group.size(); ++g) {
          if (found[g]) {
            hits[slot[g]] = std::move(found[g]);
            hit_comp[slot[g]] = static_cast<int>(ci);
          }
        }
      }
      for (std::size_t m = 0; m < members.size(); ++m) {
        // After an early stop only members that were found are definitive.
        if (hits[m] || !hits[0]) {
          cache[members[m]] = hits[m];
          match_comp[members[m]] = hit_comp[m];
        }
      }
    }
    if (*cache[i]) {
      const auto& comp = comps[match_comp[i]];
      return build_model(host, comp, patterns[i], **cache[i], required);
    }
  }
  return std::nullopt;
}

bool is_triangle(const LabeledMultigraph& g, const std::array<EdgeId, 3>& t) {
  std::array<EdgeId, 3> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  for (EdgeId e : sorted) {
    if (!g.has_edge(e)) return false;
  }
  const auto all = triangles(g);
  return std::binary_search(all.begin(), all.end(), sorted);
}

}  // namespace

Pattern catalog_pattern(const std::string& name) {
  auto entry = catalog::build(name);
  return Pattern{entry.name, std::move(entry.graph)};
}

std::vector<Pattern> k33_family() {
  return {catalog_pattern("K33"), catalog_pattern("K33_01"), catalog_pattern("K33_02"), catalog_pattern("K33_11")};
}

std::vector<Pattern> k33_k5_family() {
  auto family = k33_family();
  family.push_back(catalog_pattern("K5"));
  std::stable_sort(family.begin(), family.end(),
                   [](const Pattern& a, const Pattern& b) { return a.graph.num_edges() < b.graph.num_edges(); });
  return family;
}

std::optional<MinorModel> find_minor(const LabeledMultigraph& host, const Pattern& pattern,
                                     const std::set<EdgeId>& required, const SearchOptions& options) {
  return search(host, {pattern}, required, options);
}

std::optional<MinorModel> find_family_minor(const RootedQuery& query, const SearchOptions& options) {
  std::set<EdgeId> required = query.required;
  if (query.triangle) {
    check_required(query.host, {query.triangle->begin(), query.triangle->end()});
    if (!is_triangle(query.host, *query.triangle)) throw Error("the given edges do not form a triangle of the host");
    const std::set<EdgeId> t(query.triangle->begin(), query.triangle->end());
    if (!required.empty() && required != t) throw Error("in triangle mode the required set must equal the triangle");
    required = t;
  }
  auto model = search(query.host, query.family, required, options);
  if (model && query.triangle) {
    // Kept triangle edges must land on a triangle of the pattern.
    const auto minor = apply_model(query.host, *model);
    std::set<VertexId> image;
    for (EdgeId e : required) {
      const Edge& edge = minor.edge(e);
      image.insert(model->iso.at(edge.a));
      image.insert(model->iso.at(edge.b));
    }
    if (image.size() != 3) throw Error("internal: triangle edges not mapped onto a pattern triangle");
  }
  return model;
}

std::optional<MinorModel> preserve_triangle_k331(const LabeledMultigraph& host, const std::array<EdgeId, 3>& triangle,
                                                 const SearchOptions& options) {
  return find_family_minor(RootedQuery{host, {catalog_pattern("K33_11")}, {}, triangle}, options);
}

std::optional<MinorModel> preserve_triangle_k5(const LabeledMultigraph& host, const std::array<EdgeId, 3>& triangle,
                                               const SearchOptions& options) {
  if (!is_triangle(host, triangle)) throw Error("the given edges do not form a triangle of the host");
  const auto k5 = catalog::build("K5");
  if (auto iso = are_isomorphic(host, k5.graph)) {
    return MinorModel{"K5", {}, {}, *iso};
  }
  auto model = preserve_triangle_k331(host, triangle, options);
  if (!model) {
    // Some hosts (K33^{1,3} with T on its triangle side, for one) have no
    // triangle-keeping K33^{1,1} model but do have a triangle-keeping K5
    // model, so fall back to searching for K5 directly.
    const RootedQuery q{host, {catalog_pattern("K5")}, {triangle.begin(), triangle.end()}, triangle};
    return find_family_minor(q, options);
  }

  const auto k331 = catalog::build("K33_11");
  const VertexId u1 = k331.vertex("u1"), v1 = k331.vertex("v1");
  const auto minor = apply_model(host, *model);
  std::optional<EdgeId> bridge;
  for (const auto& [id, e] : minor.edges()) {
    const std::set<VertexId> ends{model->iso.at(e.a), model->iso.at(e.b)};
    if (ends == std::set<VertexId>{u1, v1}) bridge = id;
  }
  if (!bridge) throw Error("internal: K33^{1,1} model lacks its u1v1 edge");

  // Contracting u1v1 in the pattern gives K5; compose with a fixed iso.
  const auto collapsed = contract_edge(k331.graph, k331.edge("u1", "v1"));
  const auto to_k5 = are_isomorphic(collapsed, k5.graph);
  if (!to_k5) throw Error("internal: K33^{1,1}/u1v1 is not K5");
  const Edge host_bridge = minor.edge(*bridge);
  const VertexId keep = std::min(host_bridge.a, host_bridge.b);
  const VertexId merged_pattern = std::min(u1, v1);

  MinorModel out{"K5", model->contracted, model->deleted, {}};
  out.contracted.insert(*bridge);
  for (const auto& [hv, pv] : model->iso) {
    const VertexId host_vertex = (hv == host_bridge.a || hv == host_bridge.b) ? keep : hv;
    const VertexId pattern_vertex = (pv == u1 || pv == v1) ? merged_pattern : pv;
    out.iso[host_vertex] = to_k5->at(pattern_vertex);
  }
  return out;
}

std::optional<MinorModel> obstruction(const LabeledMultigraph& g, const SearchOptions& options) {
  if (auto m = find_minor(g, catalog_pattern("K33"), {}, options)) return m;
  return find_minor(g, catalog_pattern("K5"), {}, options);
}

bool k5_iff_k331(const LabeledMultigraph& host, const SearchOptions& options) {
  if (!host.is_simple() || !is_three_connected(host)) {
    throw Error("k5_iff_k331 requires a simple 3-connected host");
  }
  if (are_isomorphic(host, catalog::build("K5").graph)) {
    throw Error("k5_iff_k331 requires a host not isomorphic to K5");
  }
  const bool has_k5 = find_minor(host, catalog_pattern("K5"), {}, options).has_value();
  const bool has_k331 = find_minor(host, catalog_pattern("K33_11"), {}, options).has_value();
  return has_k5 == has_k331;
}

}  // namespace rminor
