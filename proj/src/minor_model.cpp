#include <functional>
#include <numeric>

#include "rminor/catalog.hpp"
#include "rminor/minor.hpp"

namespace rminor {

LabeledMultigraph apply_model(const LabeledMultigraph& host, const MinorModel& m) {
  for (EdgeId e : m.contracted) {
    if (!host.has_edge(e)) throw Error("model contracts unknown edge " + std::to_string(e));
    if (m.deleted.contains(e)) throw Error("edge " + std::to_string(e) + " is both contracted and deleted");
  }
  for (EdgeId e : m.deleted) {
    if (!host.has_edge(e)) throw Error("model deletes unknown edge " + std::to_string(e));
  }
  std::map<VertexId, VertexId> parent;
  for (VertexId v : host.vertices()) parent[v] = v;
  std::function<VertexId(VertexId)> find = [&](VertexId v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (EdgeId e : m.contracted) {
    const Edge& edge = host.edge(e);
    const VertexId a = find(edge.a), b = find(edge.b);
    if (a == b) throw Error("contracted set contains a cycle (edge " + std::to_string(e) + ")");
    parent[b] = a;
  }
  return drop_isolated_vertices(contract_delete(host, m.contracted, m.deleted));
}

Verification verify_model(const LabeledMultigraph& host, const MinorModel& m, const LabeledMultigraph& pattern) {
  LabeledMultigraph minor;
  try {
    minor = apply_model(host, m);
  } catch (const Error& ex) {
    return {false, ex.what()};
  }
  if (minor.num_vertices() != pattern.num_vertices() || minor.num_edges() != pattern.num_edges()) {
    return {false, "not isomorphic: minor has " + std::to_string(minor.num_vertices()) + " vertices and " +
                       std::to_string(minor.num_edges()) + " edges, pattern has " +
                       std::to_string(pattern.num_vertices()) + " and " + std::to_string(pattern.num_edges())};
  }
  for (const auto& [hv, pv] : m.iso) {
    if (!minor.has_vertex(hv)) return {false, "not isomorphic: iso names vertex " + std::to_string(hv) + " absent from the minor"};
  }
  if (!is_isomorphism(minor, pattern, m.iso)) {
    return {false, "not isomorphic: iso does not carry the minor's edges onto the pattern"};
  }
  return {true, "ok"};
}

Verification verify_model(const LabeledMultigraph& host, const MinorModel& m) {
  if (!catalog::contains(m.pattern)) return {false, "unknown pattern '" + m.pattern + "'"};
  return verify_model(host, m, catalog::build(m.pattern).graph);
}

}  // namespace rminor
