#include "doctest.h"

#include "helpers.hpp"
#include "oracle/oracles.hpp"
#include "rminor/graph_io.hpp"

using namespace rminor;
using namespace testing;

TEST_CASE("contract_edge") {
  SUBCASE("K33_11 / u1v1 is K5") {
    const auto e = catalog::build("K33_11");
    CHECK(are_isomorphic(contract_edge(e.graph, e.edge("u1", "v1")), complete(5)));
  }
  SUBCASE("single edge collapses to one vertex") {
    const auto g = contract_edge(LabeledMultigraph::from_pairs(2, {{0, 1}}), 0);
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
  }
  SUBCASE("triangle edge leaves a parallel pair") {
    const auto g = contract_edge(complete(3), 0);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 2);
    CHECK(g.edges_between(0, 2).size() == 2);
  }
  SUBCASE("keeps the smaller vertex id") {
    const auto g = LabeledMultigraph::from_edges({3, 9, 4}, {{5, {9, 3}}, {6, {9, 4}}});
    const auto h = contract_edge(g, 5);
    CHECK(h.vertices() == std::set<VertexId>{3, 4});
    CHECK(h.edge(6) == Edge{3, 4});
  }
  SUBCASE("parallel companions become loops, which simplify removes") {
    auto g = LabeledMultigraph::from_pairs(2, {{0, 1}, {0, 1}});
    const auto h = contract_edge(g, 0);
    CHECK(h.edge(1).is_loop());
    CHECK(h.degree(0) == 2);
    CHECK(simplify(h).graph.num_edges() == 0);
  }
  SUBCASE("missing edge is an error") { CHECK_THROWS_AS(contract_edge(complete(3), 17), Error); }
}

TEST_CASE("delete_edge and delete_vertex") {
  CHECK(delete_edge(complete(5), 3).num_edges() == 9);
  CHECK(delete_edge(complete(5), 3).num_vertices() == 5);
  const auto k3301 = catalog::build("K33_01");
  CHECK(are_isomorphic(delete_edge(k3301.graph, k3301.edge("v2", "v3")), cat("K33")));
  CHECK(delete_vertex(LabeledMultigraph::from_pairs(2, {}), 1).num_vertices() == 1);
  const auto h = delete_vertex(complete(4), 0);
  CHECK(h.num_edges() == 3);
  CHECK_THROWS_AS(delete_vertex(complete(3), 9), Error);
  CHECK_THROWS_AS(delete_edge(complete(3), 9), Error);
}

TEST_CASE("simplify") {
  SUBCASE("simple graph is unchanged") {
    const auto g = cat("K33_11");
    const auto s = simplify(g);
    CHECK(s.graph == g);
    for (const auto& [id, e] : g.edges()) CHECK(s.representative.at(id) == id);
  }
  SUBCASE("smallest id wins without preference") {
    const auto g = LabeledMultigraph::from_edges({0, 1}, {{7, {0, 1}}, {3, {0, 1}}});
    const auto s = simplify(g);
    CHECK(s.graph.num_edges() == 1);
    CHECK(s.graph.has_edge(3));
    CHECK(s.representative.at(7) == 3);
  }
  SUBCASE("preferred member wins") {
    auto g = complete(3);
    g.add_edge(10, 0, 1);
    const auto s = simplify(g, {10});
    CHECK(s.graph.has_edge(10));
    CHECK_FALSE(s.graph.has_edge(0));
    CHECK(are_isomorphic(s.graph, complete(3)));
  }
  SUBCASE("idempotent and keeps vertices") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      auto g = random_simple(rng, 6, 0.5);
      for (int k = 0; k < 4 && g.num_edges() > 0; ++k) g = contract_edge(g, g.edges().begin()->first);
      const auto once = simplify(g).graph;
      CHECK(simplify(once).graph == once);
      CHECK(once.vertices() == g.vertices());
      CHECK(once.is_simple());
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(vertex_connectivity(complete(5)) == 4);
  CHECK(vertex_connectivity(cat("K33")) == 3);
  CHECK(vertex_connectivity(cycle(5)) == 2);
  CHECK(vertex_connectivity(LabeledMultigraph::from_pairs(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(is_three_connected(complete(4)));
  CHECK_FALSE(is_three_connected(cycle(6)));
  CHECK_FALSE(is_three_connected(complete(3)));
  CHECK(is_three_connected(petersen()));
  CHECK(is_three_connected(icosahedron()));

  SUBCASE("agrees with brute-force cut enumeration") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const int n = 2 + static_cast<int>(rng() % 7);
      const auto g = random_simple(rng, n, 0.3 + 0.1 * (i % 6));
      const int brute = oracle::brute_force_connectivity(g);
      CHECK(vertex_connectivity(g) == brute);
      CHECK(is_three_connected(g) == (n >= 4 && brute >= 3));
    }
  }
}

TEST_CASE("isomorphism") {
  const auto g1 = catalog::build("G1");
  CHECK(are_isomorphic(cat("G2"), add_edge(g1.graph, g1.vertex("v1"), g1.vertex("w1"))));
  SUBCASE("side symmetry of K33") {
    const auto k33 = catalog::build("K33");
    const auto other_side = add_edge(k33.graph, k33.vertex("u2"), k33.vertex("u3"));
    CHECK(are_isomorphic(other_side, cat("K33_01")));
  }
  CHECK_FALSE(are_isomorphic(cat("K33_02"), cat("K33_11")));
  CHECK_FALSE(are_isomorphic(complete(5), cat("K33")));

  SUBCASE("reflexive on the catalog, bijections validate") {
    for (const auto& name : catalog::names()) {
      const auto g = cat(name.c_str());
      const auto m = are_isomorphic(g, g);
      REQUIRE(m);
      CHECK(is_isomorphism(g, g, *m));
    }
  }
  SUBCASE("relabelled copies are found in both directions") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_simple(rng, 3 + static_cast<int>(rng() % 6), 0.5);
      const auto h = relabel(g, rng);
      const auto f = are_isomorphic(g, h);
      const auto b = are_isomorphic(h, g);
      REQUIRE(f);
      REQUIRE(b);
      CHECK(is_isomorphism(g, h, *f));
      CHECK(is_isomorphism(h, g, *b));
      CHECK(invariant_hash(g) == invariant_hash(h));
    }
  }
  SUBCASE("symmetric on random pairs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_simple(rng, 5, 0.5);
      const auto b = random_simple(rng, 5, 0.5);
      CHECK(are_isomorphic(a, b).has_value() == are_isomorphic(b, a).has_value());
    }
  }
  SUBCASE("multigraphs count parallel edges") {
    auto a = LabeledMultigraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}});
    auto b = LabeledMultigraph::from_pairs(3, {{0, 1}, {1, 2}, {1, 2}});
    auto c = LabeledMultigraph::from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(are_isomorphic(a, b));
    CHECK_FALSE(are_isomorphic(a, c));
  }
  SUBCASE("vertex colours restrict the map") {
    const auto p = LabeledMultigraph::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(are_isomorphic(p, p, {{0, 1}}, {{2, 1}}));
    CHECK_FALSE(are_isomorphic(p, p, {{0, 1}}, {{1, 1}}));
  }
}

TEST_CASE("triangles") {
  CHECK(triangles(cat("K33")).empty());
  CHECK(triangles(complete(5)).size() == 10);
  // K33^{1,1}: each added edge closes a triangle with each of the three
  // opposite vertices.
  CHECK(triangles(cat("K33_11")).size() == 6);
  CHECK(triangles(cat("K33_02")).size() == 6);
  for (const auto& name : catalog::names()) {
    const auto g = cat(name.c_str());
    CHECK(triangles(g) == oracle::brute_force_triangles(g));
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto g = random_simple(rng, 6, 0.6);
    g = add_edge(g, 0, 1);  // a parallel edge doubles triangles through 01
    CHECK(triangles(g) == oracle::brute_force_triangles(g));
  }
}

TEST_CASE("split_vertex") {
  SUBCASE("splitting a degree-4 vertex of K33_01 can give G1") {
    const auto k = catalog::build("K33_01");
    const VertexId v2 = k.vertex("v2");
    const auto inc = k.graph.incident_edges(v2);
    REQUIRE(inc.size() == 4);
    bool found = false;
    for (int mask = 0; mask < 16; ++mask) {
      if (!(mask & 1) || std::popcount(static_cast<unsigned>(mask)) != 2) continue;
      VertexSplit s{v2, {}, {}, k.graph.next_edge_id()};
      for (int i = 0; i < 4; ++i) ((mask >> i) & 1 ? s.part_a : s.part_b).insert(inc[i]);
      found = found || are_isomorphic(split_vertex(k.graph, s), cat("G1")).has_value();
    }
    CHECK(found);
  }
  SUBCASE("round trip through contraction") {
    std::mt19937_64 rng(13);
    for (const auto& name : catalog::names()) {
      const auto g = cat(name.c_str());
      for (VertexId v : g.vertices()) {
        const auto inc = g.incident_edges(v);
        if (inc.size() < 4) continue;
        VertexSplit s{v, {inc[0], inc[1]}, {}, g.next_edge_id()};
        for (std::size_t i = 2; i < inc.size(); ++i) s.part_b.insert(inc[i]);
        const auto h = split_vertex(g, s);
        CHECK(h.num_vertices() == g.num_vertices() + 1);
        CHECK(contract_edge(h, s.new_edge) == g);
      }
    }
  }
  SUBCASE("invalid partitions") {
    const auto g = complete(5);
    const auto inc = g.incident_edges(0);
    CHECK_THROWS_AS(split_vertex(g, {0, {inc[0]}, {inc[1], inc[2], inc[3]}, 99}), Error);
    CHECK_THROWS_AS(split_vertex(g, {0, {inc[0], inc[1]}, {inc[1], inc[2], inc[3]}, 99}), Error);
    CHECK_THROWS_AS(split_vertex(g, {0, {inc[0], inc[1]}, {inc[2]}, 99}), Error);
    CHECK_THROWS_AS(split_vertex(g, {0, {inc[0], inc[1]}, {inc[2], inc[3]}, inc[0]}), Error);
  }
}

TEST_CASE("minor-order properties") {
  SUBCASE("contraction of disjoint non-adjacent edges commutes") {
    for (const char* name : {"K33", "K33_11", "G1", "G5", "K5"}) {
      const auto g = cat(name);
      for (const auto& [e, ee] : g.edges()) {
        for (const auto& [f, ff] : g.edges()) {
          if (f <= e || ee.a == ff.a || ee.a == ff.b || ee.b == ff.a || ee.b == ff.b) continue;
          if (!g.edges_between(ee.a, ff.a).empty() || !g.edges_between(ee.a, ff.b).empty() ||
              !g.edges_between(ee.b, ff.a).empty() || !g.edges_between(ee.b, ff.b).empty()) {
            continue;
          }
          const auto x = contract_edge(contract_edge(g, e), f);
          const auto y = contract_edge(contract_edge(g, f), e);
          CHECK(x == y);
        }
      }
    }
  }
  SUBCASE("surviving edge ids are E - C - D") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_simple(rng, 7, 0.5);
      std::set<EdgeId> c, d;
      std::map<VertexId, VertexId> parent;
      auto find = [&](VertexId v) {
        while (parent.count(v) && parent[v] != v) v = parent[v];
        return v;
      };
      for (const auto& [id, e] : g.edges()) {
        const auto roll = rng() % 3;
        if (roll == 0 && find(e.a) != find(e.b)) {
          parent[find(e.a)] = find(e.b);
          c.insert(id);
        } else if (roll == 1) {
          d.insert(id);
        }
      }
      const auto h = contract_delete(g, c, d);
      std::set<EdgeId> expect;
      for (const auto& [id, e] : g.edges()) {
        if (!c.count(id) && !d.count(id)) expect.insert(id);
      }
      std::set<EdgeId> got;
      for (const auto& [id, e] : h.edges()) got.insert(id);
      CHECK(got == expect);
      CHECK(h.num_vertices() == g.num_vertices() - c.size());
    }
  }
}

std::multiset<std::pair<VertexId, VertexId>> endpoint_pairs(const LabeledMultigraph& g) {
  std::multiset<std::pair<VertexId, VertexId>> out;
  for (const auto& [id, e] : g.edges()) out.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  return out;
}

TEST_CASE("graph6 and JSON") {
  CHECK(are_isomorphic(parse_graph6("D~{"), complete(5)));
  CHECK(parse_graph6(">>graph6<<D~{").num_edges() == 10);
  CHECK(to_graph6(complete(5)) == "D~{");
  CHECK(parse_graph6("@").num_vertices() == 1);
  CHECK(parse_graph6("?").num_vertices() == 0);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_simple(rng, 1 + static_cast<int>(rng() % 10), 0.5);
    // graph6 renumbers edges column by column; vertices and endpoints survive.
    const auto back = parse_graph6(to_graph6(g));
    CHECK(back.vertices() == g.vertices());
    CHECK(endpoint_pairs(back) == endpoint_pairs(g));
    CHECK(graph_from_json(nlohmann::json::parse(to_json(g).dump())) == g);
  }
  auto multi = LabeledMultigraph::from_pairs(2, {{0, 1}, {0, 1}, {1, 1}});
  CHECK(graph_from_json(nlohmann::json::parse(to_json(multi).dump())) == multi);
  CHECK_THROWS_AS(to_graph6(multi), Error);
  CHECK_THROWS_AS(parse_graph6("D~"), Error);
  CHECK_THROWS_AS(parse_graph6("D~{{"), Error);
  CHECK_THROWS_AS(parse_graph6("D\x01{"), Error);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[0],"edges":[{"id":0,"a":0,"b":1}]})")),
                  Error);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertices":[0,1],"edges":[{"id":0,"a":0,"b":1},{"id":0,"a":1,"b":0}]})")),
                  Error);
}
