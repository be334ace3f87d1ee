#include "rminor/graph.hpp"

#include <algorithm>
#include <string>

namespace rminor {

LabeledMultigraph LabeledMultigraph::from_edges(
    const std::vector<VertexId>& vertices,
    const std::vector<std::pair<EdgeId, Edge>>& edges) {
  LabeledMultigraph g;
  for (VertexId v : vertices) g.add_vertex(v);
  for (const auto& [id, e] : edges) g.add_edge(id, e.a, e.b);
  return g;
}

LabeledMultigraph LabeledMultigraph::from_pairs(
    int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  LabeledMultigraph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  EdgeId id = 0;
  for (const auto& [a, b] : pairs) g.add_edge(id++, a, b);
  return g;
}

void LabeledMultigraph::add_vertex(VertexId v) { vertices_.insert(v); }

void LabeledMultigraph::add_edge(EdgeId id, VertexId a, VertexId b) {
  if (edges_.contains(id)) {
    throw Error("duplicate edge id " + std::to_string(id));
  }
  if (!has_vertex(a) || !has_vertex(b)) {
    throw Error("edge " + std::to_string(id) + " has an endpoint outside the vertex set");
  }
  edges_.emplace(id, Edge{std::min(a, b), std::max(a, b)});
}

const Edge& LabeledMultigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw Error("missing edge " + std::to_string(e));
  return it->second;
}

int LabeledMultigraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& [id, e] : edges_) {
    if (e.a == v) ++d;
    if (e.b == v) ++d;
  }
  return d;
}

std::vector<EdgeId> LabeledMultigraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& [id, e] : edges_) {
    if (e.a == v || e.b == v) out.push_back(id);
  }
  return out;
}

std::set<VertexId> LabeledMultigraph::neighbors(VertexId v) const {
  std::set<VertexId> out;
  for (const auto& [id, e] : edges_) {
    if (e.is_loop()) continue;
    if (e.a == v) out.insert(e.b);
    if (e.b == v) out.insert(e.a);
  }
  return out;
}

std::vector<EdgeId> LabeledMultigraph::edges_between(VertexId a, VertexId b) const {
  const VertexId lo = std::min(a, b), hi = std::max(a, b);
  std::vector<EdgeId> out;
  for (const auto& [id, e] : edges_) {
    if (e.a == lo && e.b == hi) out.push_back(id);
  }
  return out;
}

bool LabeledMultigraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [id, e] : edges_) {
    if (e.is_loop() || !seen.emplace(e.a, e.b).second) return false;
  }
  return true;
}

EdgeId LabeledMultigraph::next_edge_id() const {
  return edges_.empty() ? 0 : edges_.rbegin()->first + 1;
}

VertexId LabeledMultigraph::next_vertex_id() const {
  return vertices_.empty() ? 0 : *vertices_.rbegin() + 1;
}

LabeledMultigraph contract_edge(const LabeledMultigraph& g, EdgeId e) {
  const Edge target = g.edge(e);
  const VertexId keep = target.a;  // endpoints are stored with a <= b
  const VertexId gone = target.b;
  LabeledMultigraph out;
  for (VertexId v : g.vertices()) {
    if (v != gone || gone == keep) out.add_vertex(v);
  }
  for (const auto& [id, edge] : g.edges()) {
    if (id == e) continue;
    out.add_edge(id, edge.a == gone ? keep : edge.a, edge.b == gone ? keep : edge.b);
  }
  return out;
}

LabeledMultigraph delete_edge(const LabeledMultigraph& g, EdgeId e) {
  g.edge(e);
  LabeledMultigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  for (const auto& [id, edge] : g.edges()) {
    if (id != e) out.add_edge(id, edge.a, edge.b);
  }
  return out;
}

LabeledMultigraph delete_vertex(const LabeledMultigraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw Error("missing vertex " + std::to_string(v));
  LabeledMultigraph out;
  for (VertexId u : g.vertices()) {
    if (u != v) out.add_vertex(u);
  }
  for (const auto& [id, edge] : g.edges()) {
    if (edge.a != v && edge.b != v) out.add_edge(id, edge.a, edge.b);
  }
  return out;
}

LabeledMultigraph add_edge(const LabeledMultigraph& g, VertexId a, VertexId b) {
  LabeledMultigraph out = g;
  out.add_edge(g.next_edge_id(), a, b);
  return out;
}

LabeledMultigraph contract_delete(const LabeledMultigraph& g,
                                  const std::set<EdgeId>& contracted,
                                  const std::set<EdgeId>& deleted) {
  for (EdgeId e : deleted) {
    if (contracted.contains(e)) {
      throw Error("edge " + std::to_string(e) + " is both contracted and deleted");
    }
  }
  LabeledMultigraph out = g;
  for (EdgeId e : deleted) out = delete_edge(out, e);
  for (EdgeId e : contracted) out = contract_edge(out, e);
  return out;
}

LabeledMultigraph drop_isolated_vertices(const LabeledMultigraph& g) {
  std::set<VertexId> used;
  for (const auto& [id, e] : g.edges()) {
    used.insert(e.a);
    used.insert(e.b);
  }
  LabeledMultigraph out;
  for (VertexId v : used) out.add_vertex(v);
  for (const auto& [id, e] : g.edges()) out.add_edge(id, e.a, e.b);
  return out;
}

Simplification simplify(const LabeledMultigraph& g, const std::set<EdgeId>& preferred) {
  // Edges are visited in increasing id, so the first member seen is the
  // smallest; a preferred member displaces a non-preferred one.
  std::map<std::pair<VertexId, VertexId>, EdgeId> winner;
  for (const auto& [id, e] : g.edges()) {
    if (e.is_loop()) continue;
    auto [it, inserted] = winner.emplace(std::pair{e.a, e.b}, id);
    if (!inserted && preferred.contains(id) && !preferred.contains(it->second)) {
      it->second = id;
    }
  }
  Simplification out;
  for (VertexId v : g.vertices()) out.graph.add_vertex(v);
  for (const auto& [ends, id] : winner) out.graph.add_edge(id, ends.first, ends.second);
  for (const auto& [id, e] : g.edges()) {
    if (!e.is_loop()) out.representative[id] = winner.at({e.a, e.b});
  }
  return out;
}

void validate_split(const LabeledMultigraph& g, const VertexSplit& s) {
  if (!g.has_vertex(s.vertex)) {
    throw Error("invalid split: missing vertex " + std::to_string(s.vertex));
  }
  if (s.part_a.size() < 2 || s.part_b.size() < 2) {
    throw Error("invalid split: each part needs at least two edges");
  }
  if (g.has_edge(s.new_edge)) {
    throw Error("invalid split: new edge id " + std::to_string(s.new_edge) + " already used");
  }
  std::set<EdgeId> incident;
  for (EdgeId e : g.incident_edges(s.vertex)) {
    if (g.edge(e).is_loop()) throw Error("invalid split: vertex carries a loop");
    incident.insert(e);
  }
  std::set<EdgeId> covered;
  for (EdgeId e : s.part_a) covered.insert(e);
  for (EdgeId e : s.part_b) {
    if (!covered.insert(e).second) throw Error("invalid split: parts overlap");
  }
  if (covered != incident) {
    throw Error("invalid split: parts must cover exactly the incident edges");
  }
}

LabeledMultigraph split_vertex(const LabeledMultigraph& g, const VertexSplit& s) {
  validate_split(g, s);
  const VertexId fresh = g.next_vertex_id();
  LabeledMultigraph out;
  for (VertexId v : g.vertices()) out.add_vertex(v);
  out.add_vertex(fresh);
  for (const auto& [id, e] : g.edges()) {
    if (s.part_b.contains(id)) {
      out.add_edge(id, e.other(s.vertex), fresh);
    } else {
      out.add_edge(id, e.a, e.b);
    }
  }
  out.add_edge(s.new_edge, s.vertex, fresh);
  return out;
}

std::vector<std::set<VertexId>> connected_components(const LabeledMultigraph& g) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (VertexId v : g.vertices()) adj[v];
  for (const auto& [id, e] : g.edges()) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<VertexId> seen;
  std::vector<std::set<VertexId>> out;
  for (VertexId root : g.vertices()) {
    if (seen.contains(root)) continue;
    std::set<VertexId> comp{root};
    std::vector<VertexId> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : adj[v]) {
        if (seen.insert(u).second) {
          comp.insert(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const LabeledMultigraph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<std::array<EdgeId, 3>> triangles(const LabeledMultigraph& g) {
  std::vector<std::array<EdgeId, 3>> out;
  const std::vector<VertexId> vs(g.vertices().begin(), g.vertices().end());
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> between;
  for (const auto& [id, e] : g.edges()) {
    if (!e.is_loop()) between[{e.a, e.b}].push_back(id);
  }
  auto lookup = [&](VertexId x, VertexId y) -> const std::vector<EdgeId>* {
    auto it = between.find({x, y});
    return it == between.end() ? nullptr : &it->second;
  };
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const auto* xy = lookup(vs[i], vs[j]);
      if (!xy) continue;
      for (std::size_t k = j + 1; k < vs.size(); ++k) {
        const auto* xz = lookup(vs[i], vs[k]);
        const auto* yz = lookup(vs[j], vs[k]);
        if (!xz || !yz) continue;
        for (EdgeId a : *xy)
          for (EdgeId b : *xz)
            for (EdgeId c : *yz) {
              std::array<EdgeId, 3> t{a, b, c};
              std::sort(t.begin(), t.end());
              out.push_back(t);
            }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rminor
