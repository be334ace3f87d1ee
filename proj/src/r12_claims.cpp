#include <algorithm>

#include "rminor/catalog.hpp"
#include "rminor/matroid.hpp"

namespace rminor {

namespace {

using nlohmann::ordered_json;

ordered_json iso_json(const MatroidIso& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [a, b] : m) j[std::to_string(a)] = b;
  return j;
}

const std::vector<std::string>& fc_names() {
  static const std::vector<std::string> names = {"K33", "K33_01", "K33_02", "K33_11"};
  return names;
}

// Names of the family graphs whose cycle matroid is isomorphic to m.
ordered_json graphic_class(const BinaryMatroid& m) {
  ordered_json out = ordered_json::array();
  const auto fc = fc_family();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (matroid_isomorphic(m, fc[i])) out.push_back(fc_names()[i]);
  }
  return out;
}

ordered_json summary(const BinaryMatroid& m) {
  return {{"rank", m.rank()}, {"elements", m.size()}, {"isomorphic_to", graphic_class(m)}};
}

// The graph drawn with edge labels 2..12 (no 9); vertex ids follow z2..z7.
LabeledMultigraph labelled_k33_01() {
  LabeledMultigraph g;
  for (VertexId v = 2; v <= 7; ++v) g.add_vertex(v);
  const std::vector<std::array<int, 3>> edges = {
      {2, 2, 7}, {3, 3, 7}, {4, 4, 7}, {5, 6, 5},  {6, 6, 7},
      {7, 3, 2}, {8, 4, 2}, {10, 6, 2}, {11, 3, 5}, {12, 4, 5},
  };
  for (const auto& [id, a, b] : edges) g.add_edge(id, a, b);
  return g;
}

ClaimCheck row_reversal() {
  ClaimCheck c{1, "row reversal of B induces an automorphism with 1 -> 6", false, {}};
  const BinaryMatroid m = r12();
  const auto b = m.matrix();
  std::vector<std::vector<int>> reversed(b.rbegin(), b.rend());
  // Column j of the reversed matrix equals column phi(j) of B.
  MatroidIso phi;
  for (std::size_t j = 0; j < b.front().size(); ++j) {
    for (std::size_t k = 0; k < b.front().size(); ++k) {
      bool equal = true;
      for (std::size_t i = 0; i < b.size() && equal; ++i) equal = reversed[i][j] == b[i][k];
      if (equal) {
        phi[m.elements()[j]] = m.elements()[k];
        break;
      }
    }
  }
  const bool automorphism = is_matroid_isomorphism(m, m, phi);
  c.pass = automorphism && phi.count(1) && phi.at(1) == 6;
  c.witness = {{"phi", iso_json(phi)}, {"automorphism", automorphism}};
  return c;
}

ClaimCheck self_duality() {
  ClaimCheck c{2, "R12 is self-dual by an isomorphism taking 1 -> 7", false, {}};
  const BinaryMatroid m = r12();
  const BinaryMatroid d = dual(m);
  const auto iso = matroid_isomorphic(m, d, {{1, 7}});
  c.pass = iso.has_value();
  c.witness = {{"dual", to_json(d)}, {"isomorphism", iso ? iso_json(*iso) : ordered_json(nullptr)}};
  return c;
}

ClaimCheck orbit_contractions() {
  ClaimCheck c{3, "si(R12/1) = si(R12/6) = si(R12/7) = M(K33_02)", false, {}};
  const BinaryMatroid m = r12();
  const BinaryMatroid s1 = simplify_matroid(contract(m, 1));
  const BinaryMatroid s6 = simplify_matroid(contract(m, 6));
  const BinaryMatroid s7 = simplify_matroid(contract(m, 7));
  const BinaryMatroid k = cycle_matroid(catalog::build("K33_02").graph);
  const auto i16 = matroid_isomorphic(s1, s6);
  const auto i17 = matroid_isomorphic(s1, s7);
  const auto i1k = matroid_isomorphic(s1, k);
  c.pass = i16 && i17 && i1k;
  c.witness = {
      {"si(R12/1)", summary(s1)},
      {"si(R12/6)", summary(s6)},
      {"si(R12/7)", summary(s7)},
      {"M(K33_02)", {{"rank", k.rank()}, {"elements", k.size()}}},
      {"si(R12/1)~si(R12/6)", i16 ? iso_json(*i16) : ordered_json(nullptr)},
      {"si(R12/1)~si(R12/7)", i17 ? iso_json(*i17) : ordered_json(nullptr)},
      {"si(R12/1)~M(K33_02)", i1k ? iso_json(*i1k) : ordered_json(nullptr)},
  };
  return c;
}

ClaimCheck drawn_graph() {
  ClaimCheck c{4, "R12/1\\9 = si(R12/1) = R12/1\\5 is the cycle matroid of the drawn graph", false, {}};
  const BinaryMatroid m1 = contract(r12(), 1);
  const BinaryMatroid del9 = delete_element(m1, 9);
  const BinaryMatroid del5 = delete_element(m1, 5);
  const BinaryMatroid si = simplify_matroid(m1);
  const LabeledMultigraph g = labelled_k33_01();
  const BinaryMatroid mg = cycle_matroid(g);
  const bool parallel = m1.column(5) == m1.column(9);
  const bool a = matroid_isomorphic(del9, si).has_value();
  const bool b = matroid_isomorphic(del5, si).has_value();
  MatroidIso identity;
  for (int e : si.elements()) identity[e] = e;
  const bool labels_match = mg.size() == si.size() && std::all_of(si.elements().begin(), si.elements().end(),
                                                                   [&](int e) { return mg.has(e); });
  const bool graphic = labels_match && is_matroid_isomorphism(si, mg, identity);
  c.pass = parallel && a && b && graphic;
  c.witness = {
      {"columns_5_9_parallel_in_R12/1", parallel},
      {"R12/1\\9~si(R12/1)", a},
      {"R12/1\\5~si(R12/1)", b},
      {"matrix_A", to_json(si)},
      {"graph_edges", [&] {
         ordered_json e = ordered_json::array();
         for (const auto& [id, edge] : g.edges()) e.push_back({id, "z" + std::to_string(edge.a), "z" + std::to_string(edge.b)});
         return e;
       }()},
      {"identity_is_isomorphism", graphic},
      {"isomorphic_to", graphic_class(si)},
  };
  return c;
}

ClaimCheck pair_coverage() {
  ClaimCheck c{5, "every pair of R12 elements lies in an Fc-minor", false, {}};
  const BinaryMatroid m = r12();
  const auto fc = fc_family();
  ordered_json pairs = ordered_json::array();
  int covered = 0;
  for (int e = 1; e <= 12; ++e) {
    for (int f = e + 1; f <= 12; ++f) {
      const auto w = matroid_has_minor(m, fc, {e, f});
      if (w) {
        ++covered;
        pairs.push_back({{"pair", {e, f}},
                         {"target", fc_names()[w->target]},
                         {"contracted", w->contracted},
                         {"deleted", w->deleted}});
      } else {
        pairs.push_back({{"pair", {e, f}}, {"target", nullptr}});
      }
    }
  }
  c.pass = covered == 66;
  c.witness = {{"covered", covered}, {"total", 66}, {"pairs", pairs}};
  return c;
}

ClaimCheck cardinality_exclusions() {
  ClaimCheck c{6, "a single-element extension of M(K5) has 11 elements: not R10, no R12-minor", false, {}};
  const int k5 = cycle_matroid(catalog::build("K5").graph).size();
  const int size = k5 + 1;
  const int r10_size = r10().size();
  const int r12_size = r12().size();
  c.pass = size != r10_size && size < r12_size;
  c.witness = {{"extension_elements", size}, {"R10_elements", r10_size}, {"R12_elements", r12_size}};
  return c;
}

}  // namespace

bool R12Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.pass; });
}

R12Report verify_r12_claims() {
  R12Report r;
  r.checks.push_back(row_reversal());
  r.checks.push_back(self_duality());
  r.checks.push_back(orbit_contractions());
  r.checks.push_back(drawn_graph());
  r.checks.push_back(pair_coverage());
  r.checks.push_back(cardinality_exclusions());
  return r;
}

nlohmann::ordered_json to_json(const R12Report& r) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return {{"matrix_B", to_json(r12())}, {"checks", checks}, {"verdict", r.pass() ? "pass" : "fail"}};
}

}  // namespace rminor
