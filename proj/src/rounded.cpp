#include "rminor/rounded.hpp"

#include <bit>

#include "rminor/error.hpp"

namespace rminor {

namespace {

std::map<VertexId, int> root_colors(const Candidate& c) {
  const Edge& e = c.graph.edge(c.element);
  return {{e.a, 1}, {e.b, 1}};
}

void require_simple_three_connected(const Pattern& p) {
  if (!p.graph.is_simple() || !is_three_connected(p.graph)) {
    throw Error(p.name + " must be simple and 3-connected");
  }
}

std::vector<Candidate> reduce(std::vector<Candidate> raw) {
  std::vector<Candidate> out;
  std::vector<std::uint64_t> hashes;
  for (auto& c : raw) {
    const auto h = invariant_hash(c.graph, root_colors(c));
    bool seen = false;
    for (std::size_t i = 0; i < out.size() && !seen; ++i) {
      seen = hashes[i] == h && same_rooted_class(out[i], c);
    }
    if (!seen) {
      hashes.push_back(h);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

bool same_rooted_class(const Candidate& a, const Candidate& b) {
  return are_isomorphic(a.graph, b.graph, root_colors(a), root_colors(b)).has_value();
}

std::vector<Candidate> enumerate_extensions_raw(const Pattern& parent) {
  require_simple_three_connected(parent);
  std::vector<Candidate> out;
  const std::vector<VertexId> vs(parent.graph.vertices().begin(), parent.graph.vertices().end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!parent.graph.edges_between(vs[i], vs[j]).empty()) continue;
      Candidate c;
      c.graph = add_edge(parent.graph, vs[i], vs[j]);
      c.parent = parent.name;
      c.kind = CandidateKind::Extension;
      c.element = parent.graph.next_edge_id();
      if (c.graph.is_simple() && is_three_connected(c.graph)) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Candidate> enumerate_coextensions_raw(const Pattern& parent) {
  require_simple_three_connected(parent);
  std::vector<Candidate> out;
  const EdgeId fresh = parent.graph.next_edge_id();
  for (VertexId v : parent.graph.vertices()) {
    const auto incident = parent.graph.incident_edges(v);
    const int d = static_cast<int>(incident.size());
    if (d < 4) continue;
    // part_a always holds incident[0], so each unordered split appears once.
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (!(mask & 1u)) continue;
      const int size_a = std::popcount(mask);
      if (size_a < 2 || d - size_a < 2) continue;
      VertexSplit s{v, {}, {}, fresh};
      for (int i = 0; i < d; ++i) ((mask >> i) & 1u ? s.part_a : s.part_b).insert(incident[i]);
      Candidate c;
      c.graph = split_vertex(parent.graph, s);
      c.parent = parent.name;
      c.kind = CandidateKind::Coextension;
      c.element = fresh;
      c.split = s;
      if (c.graph.is_simple() && is_three_connected(c.graph)) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Candidate> enumerate_extensions(const Pattern& parent) {
  return reduce(enumerate_extensions_raw(parent));
}

std::vector<Candidate> enumerate_coextensions(const Pattern& parent) {
  return reduce(enumerate_coextensions_raw(parent));
}

RoundednessReport verify_two_rounded(const std::vector<Pattern>& family, const SearchOptions& options) {
  RoundednessReport report;
  for (const auto& p : family) {
    require_simple_three_connected(p);
    report.family.push_back(p.name);
  }
  for (const auto& p : family) {
    for (auto& c : enumerate_extensions(p)) report.candidates.push_back(std::move(c));
    for (auto& c : enumerate_coextensions(p)) report.candidates.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < report.candidates.size(); ++i) {
    const auto& c = report.candidates[i];
    std::vector<RoundnessCheck> checks;
    for (const auto& [f, edge] : c.graph.edges()) {
      if (f == c.element) continue;
      RootedQuery q{c.graph, family, {c.element, f}, std::nullopt};
      auto model = find_family_minor(q, options);
      checks.push_back({f, model ? std::optional<std::string>(model->pattern) : std::nullopt});
      if (!model) report.failures.push_back({i, c.element, f});
    }
    report.checks.push_back(std::move(checks));
  }
  report.pass = report.failures.empty();
  return report;
}

}  // namespace rminor
