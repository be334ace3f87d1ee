#include "rminor/catalog.hpp"

#include <functional>
#include <string>

namespace rminor::catalog {

namespace {

using RolePairs = std::vector<std::pair<std::string, std::string>>;

Entry from_roles(std::string name, const std::vector<std::string>& roles, const RolePairs& edges) {
  Entry entry{std::move(name), {}, {}};
  for (std::size_t i = 0; i < roles.size(); ++i) {
    entry.labels[roles[i]] = static_cast<VertexId>(i);
    entry.graph.add_vertex(static_cast<VertexId>(i));
  }
  EdgeId id = 0;
  for (const auto& [a, b] : edges) entry.graph.add_edge(id++, entry.labels.at(a), entry.labels.at(b));
  return entry;
}

// K33 with i edges added inside {u1,u2,u3} and j inside {v1,v2,v3}. Added
// edges follow the drawn path u3-u2-u1 (resp. v3-v2-v1), closed by u1u3.
Entry k33(const std::string& name, int i, int j) {
  RolePairs edges;
  for (const char* u : {"u1", "u2", "u3"})
    for (const char* v : {"v1", "v2", "v3"}) edges.emplace_back(u, v);
  const RolePairs v_side{{"v3", "v2"}, {"v2", "v1"}, {"v1", "v3"}};
  const RolePairs u_side{{"u3", "u2"}, {"u2", "u1"}, {"u1", "u3"}};
  for (int k = 0; k < j; ++k) edges.push_back(v_side[k]);
  for (int k = 0; k < i; ++k) edges.push_back(u_side[k]);
  return from_roles(name, {"u1", "u2", "u3", "v1", "v2", "v3"}, edges);
}

Entry k5() {
  Entry entry{"K5", LabeledMultigraph::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                       {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
              {}};
  return entry;
}

const std::vector<std::string> kSevenVertexRoles{"u1", "u2", "u3", "v1", "v3", "w1", "w2"};

// Base drawing shared by G1..G4.
RolePairs g1_to_g4_base() {
  return {{"v1", "u3"}, {"u3", "v3"}, {"v3", "w2"}, {"w2", "w1"}, {"w1", "u2"},
          {"u2", "v3"}, {"v3", "u1"}, {"u1", "w1"}, {"u2", "v1"}, {"v1", "u1"}};
}

// Base drawing shared by G5 and G6.
RolePairs g5_g6_base() {
  return {{"v1", "u2"}, {"u2", "u3"}, {"u3", "v3"}, {"v3", "u2"}, {"u2", "w1"},
          {"w1", "w2"}, {"w2", "v3"}, {"v3", "u1"}, {"u1", "v1"}, {"v1", "u3"}};
}

Entry with_extra(std::string name, const std::vector<std::string>& roles, RolePairs base,
                 const RolePairs& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return from_roles(std::move(name), roles, base);
}

// K33^{1,1} in its drawn edge order, plus a vertex v.
Entry fig5_entry(std::string name, const RolePairs& v_edges) {
  RolePairs edges{{"u1", "v2"}, {"v2", "u3"}, {"u3", "v3"}, {"v3", "u2"}, {"u2", "v2"}, {"v2", "v3"},
                  {"v3", "u1"}, {"u1", "v1"}, {"v1", "u3"}, {"u3", "u2"}, {"u2", "v1"}};
  edges.insert(edges.end(), v_edges.begin(), v_edges.end());
  return from_roles(std::move(name), {"u1", "u2", "u3", "v1", "v2", "v3", "v"}, edges);
}

// The FIG2 drawings carry no labels; vertices are numbered by first
// appearance along the drawn polyline.
Entry unlabeled(std::string name, int n, const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  return Entry{std::move(name), LabeledMultigraph::from_pairs(n, pairs), {}};
}

const std::map<std::string, std::function<Entry()>, std::less<>>& builders() {
  static const std::map<std::string, std::function<Entry()>, std::less<>> table{
      {"K33", [] { return k33("K33", 0, 0); }},
      {"K33_01", [] { return k33("K33_01", 0, 1); }},
      {"K33_02", [] { return k33("K33_02", 0, 2); }},
      {"K33_11", [] { return k33("K33_11", 1, 1); }},
      {"K33_12", [] { return k33("K33_12", 1, 2); }},
      {"K33_22", [] { return k33("K33_22", 2, 2); }},
      {"K33_03", [] { return k33("K33_03", 0, 3); }},
      {"K33_13", [] { return k33("K33_13", 1, 3); }},
      {"K5", k5},
      {"G1", [] { return with_extra("G1", kSevenVertexRoles, g1_to_g4_base(), {{"u3", "w2"}}); }},
      {"G2", [] { return with_extra("G2", kSevenVertexRoles, g1_to_g4_base(), {{"u3", "w2"}, {"w1", "v1"}}); }},
      {"G3", [] { return with_extra("G3", kSevenVertexRoles, g1_to_g4_base(), {{"w2", "v1"}, {"u3", "w1"}}); }},
      {"G4", [] { return with_extra("G4", kSevenVertexRoles, g1_to_g4_base(), {{"w2", "v1"}, {"u3", "w2"}}); }},
      {"G5", [] { return with_extra("G5", kSevenVertexRoles, g5_g6_base(), {{"u1", "w2"}, {"u3", "w1"}}); }},
      {"G6", [] { return with_extra("G6", kSevenVertexRoles, g5_g6_base(), {{"u1", "w1"}, {"u3", "w2"}}); }},
      {"FIG2_A", [] {
         return unlabeled("FIG2_A", 7,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 4}, {4, 1}, {3, 6}, {2, 5}});
       }},
      {"FIG2_B", [] {
         return unlabeled("FIG2_B", 7,
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 4}, {4, 6}, {6, 3}, {3, 5}, {5, 0},
                           {0, 6}, {6, 1}});
       }},
      {"FIG5_1", [] { return fig5_entry("FIG5_1", {{"u1", "v"}, {"v", "v2"}}); }},
      {"FIG5_2", [] { return fig5_entry("FIG5_2", {{"v3", "v"}, {"v", "v2"}}); }},
      {"FIG5_3", [] { return fig5_entry("FIG5_3", {{"u1", "v"}, {"v", "v1"}}); }},
  };
  return table;
}

}  // namespace

VertexId Entry::vertex(const std::string& role) const {
  auto it = labels.find(role);
  if (it == labels.end()) throw Error(name + " has no vertex labeled " + role);
  return it->second;
}

EdgeId Entry::edge(const std::string& role_a, const std::string& role_b) const {
  const auto ids = graph.edges_between(vertex(role_a), vertex(role_b));
  if (ids.size() != 1) throw Error(name + " has no unique edge " + role_a + role_b);
  return ids.front();
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> order{
      "K33", "K33_01", "K33_02", "K33_11", "K33_12", "K33_22", "K33_03", "K33_13", "K5",     "G1",
      "G2",  "G3",     "G4",     "G5",     "G6",     "FIG2_A", "FIG2_B", "FIG5_1", "FIG5_2", "FIG5_3"};
  return order;
}

bool contains(std::string_view name) { return builders().contains(name); }

Entry build(std::string_view name) {
  auto it = builders().find(name);
  if (it == builders().end()) {
    std::string valid;
    for (const auto& n : names()) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown catalog graph '" + std::string(name) + "'; valid names: " + valid);
  }
  return it->second();
}

}  // namespace rminor::catalog
