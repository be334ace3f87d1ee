#include "doctest.h"

#include "helpers.hpp"
#include "oracle/oracles.hpp"
#include "rminor/generate.hpp"
#include "rminor/minor.hpp"

using namespace rminor;
using namespace testing;

namespace {

bool keeps_triangle(const LabeledMultigraph& host, const MinorModel& m, const std::array<EdgeId, 3>& t,
                    const LabeledMultigraph& pattern) {
  std::set<VertexId> image;
  for (EdgeId e : t) {
    if (m.contracted.count(e) || m.deleted.count(e)) return false;
  }
  const auto minor = apply_model(host, m);
  for (EdgeId e : t) {
    image.insert(m.iso.at(minor.edge(e).a));
    image.insert(m.iso.at(minor.edge(e).b));
  }
  if (image.size() != 3) return false;
  for (VertexId a : image) {
    for (VertexId b : image) {
      if (a < b && pattern.edges_between(a, b).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("apply_model") {
  const auto k5 = complete(5);
  VertexMap id;
  for (VertexId v : k5.vertices()) id[v] = v;
  CHECK(apply_model(k5, {"K5", {}, {}, id}) == k5);

  const auto k331 = catalog::build("K33_11");
  const auto h = apply_model(k331.graph, {"K5", {k331.edge("u1", "v1")}, {}, {}});
  CHECK(are_isomorphic(h, k5));

  SUBCASE("G4 / u3w2 with the surplus deleted") {
    const auto g4 = catalog::build("G4");
    const EdgeId e = g4.edge("u3", "w2");
    const auto contracted = contract_edge(g4.graph, e);
    const auto s = simplify(contracted);
    std::set<EdgeId> surplus;
    for (const auto& [id2, ed] : contracted.edges()) {
      if (!s.graph.has_edge(id2)) surplus.insert(id2);
    }
    const auto minor = apply_model(g4.graph, {"K33", {e}, surplus, {}});
    CHECK(minor.is_simple());
    CHECK(minor == s.graph);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(apply_model(k5, {"K5", {0}, {0}, {}}), Error);
    CHECK_THROWS_AS(apply_model(k5, {"K5", {0, 1, 4}, {}, {}}), Error);  // 0-1, 0-2, 1-2 cycle
    CHECK_THROWS_AS(apply_model(k5, {"K5", {99}, {}, {}}), Error);
  }
  SUBCASE("isolated vertices are dropped") {
    auto g = complete(5);
    g.add_vertex(9);
    CHECK(apply_model(g, {"K5", {}, {}, {}}).num_vertices() == 5);
  }
}

TEST_CASE("verify_model") {
  const auto pet = petersen();
  const auto m = find_minor(pet, catalog_pattern("K5"));
  REQUIRE(m);
  CHECK(verify_model(pet, *m));

  SUBCASE("contracting one more edge breaks the model") {
    auto bad = *m;
    for (const auto& [e, ed] : pet.edges()) {
      if (!bad.contracted.count(e) && !bad.deleted.count(e)) {
        bad.contracted.insert(e);
        break;
      }
    }
    const auto v = verify_model(pet, bad);
    CHECK_FALSE(v);
    CHECK_FALSE(v.diagnostic.empty());
  }
  SUBCASE("contracting the added edge of K33_01 is reported") {
    const auto host = cat("K33_01");
    const auto model = find_minor(host, catalog_pattern("K33"));
    REQUIRE(model);
    REQUIRE(model->deleted.size() == 1);
    auto bad = *model;
    bad.contracted = bad.deleted;
    bad.deleted.clear();
    const auto v = verify_model(host, bad);
    CHECK_FALSE(v);
    CHECK(v.diagnostic.find("not isomorphic") != std::string::npos);
  }
  SUBCASE("an inconsistent iso is rejected") {
    const auto k = catalog::build("K33_01");
    MinorModel model{"K33_01", {}, {}, {}};
    for (VertexId v : k.graph.vertices()) model.iso[v] = v;
    CHECK(verify_model(k.graph, model));
    std::swap(model.iso[k.vertex("u1")], model.iso[k.vertex("v1")]);
    CHECK_FALSE(verify_model(k.graph, model));
  }
  SUBCASE("unknown pattern") {
    auto bad = *m;
    bad.pattern = "K9";
    CHECK_FALSE(verify_model(pet, bad));
  }
}

TEST_CASE("find_minor") {
  SUBCASE("K5 in K5 with a required edge") {
    const auto m = find_minor(complete(5), catalog_pattern("K5"), {3});
    REQUIRE(m);
    CHECK(m->contracted.empty());
    CHECK(m->deleted.empty());
  }
  SUBCASE("K33 in K33_11 keeping both added edges is absent") {
    const auto k = catalog::build("K33_11");
    const std::set<EdgeId> req{k.edge("u2", "u3"), k.edge("v2", "v3")};
    CHECK_FALSE(find_minor(k.graph, catalog_pattern("K33"), req));
    CHECK_FALSE(oracle::brute_force_minor(k.graph, cat("K33"), req));
    CHECK(find_minor(k.graph, catalog_pattern("K33")));
  }
  SUBCASE("Petersen has a K5 minor") {
    const auto m = find_minor(petersen(), catalog_pattern("K5"));
    REQUIRE(m);
    CHECK(verify_model(petersen(), *m));
    CHECK(oracle::brute_force_minor(petersen(), complete(5)));
  }
  SUBCASE("too few vertices") { CHECK_FALSE(find_minor(complete(5), catalog_pattern("K33"))); }
  SUBCASE("unknown required edge") {
    CHECK_THROWS_AS(find_minor(complete(5), catalog_pattern("K5"), {42}), Error);
  }
  SUBCASE("disconnected hosts are searched per component") {
    auto g = cat("K33");
    for (VertexId v = 10; v < 13; ++v) g.add_vertex(v);
    g.add_edge(100, 10, 11);
    g.add_edge(101, 11, 12);
    CHECK(find_minor(g, catalog_pattern("K33")));
    CHECK_FALSE(find_minor(g, catalog_pattern("K33"), {0, 100}));
  }
  SUBCASE("node cap") {
    SearchOptions o;
    o.node_cap = 3;
    CHECK_THROWS_AS(find_minor(petersen(), catalog_pattern("K33"), {}, o), SearchBudgetExceeded);
  }
  SUBCASE("deterministic") {
    const auto a = find_minor(icosahedron(), catalog_pattern("K33"));
    CHECK_FALSE(a);
    const auto g = cat("G5");
    CHECK(find_minor(g, catalog_pattern("K33_01"), {1, 5}) == find_minor(g, catalog_pattern("K33_01"), {1, 5}));
  }
  SUBCASE("monotone in the required set") {
    const auto g = cat("G2");
    const auto pattern = catalog_pattern("K33_01");
    for (const auto& [e, ee] : g.edges()) {
      for (const auto& [f, ff] : g.edges()) {
        if (f <= e || !find_minor(g, pattern, {e, f})) continue;
        CHECK(find_minor(g, pattern, {e}));
        CHECK(find_minor(g, pattern, {f}));
      }
    }
  }
}

TEST_CASE("find_minor agrees with the brute-force oracle") {
  Rng rng(2024);
  const std::vector<std::string> names = {"K33", "K33_01", "K33_02", "K33_11", "K5"};
  int present = 0;
  for (int i = 0; i < 120; ++i) {
    const auto host = random_host(rng, 12);
    const auto pattern = catalog_pattern(names[i % names.size()]);
    std::set<EdgeId> req;
    if (i % 3 != 0) {
      auto it = host.edges().begin();
      std::advance(it, uniform(rng, 0, static_cast<int>(host.num_edges()) - 1));
      req.insert(it->first);
      if (i % 3 == 2) req.insert(host.edges().rbegin()->first);
    }
    const auto m = find_minor(host, pattern, req);
    CHECK(m.has_value() == oracle::brute_force_minor(host, pattern.graph, req).has_value());
    if (m) {
      ++present;
      CHECK(verify_model(host, *m, pattern.graph));
      for (EdgeId e : req) CHECK_FALSE((m->contracted.count(e) || m->deleted.count(e)));
    }
  }
  CHECK(present > 10);
}

TEST_CASE("find_family_minor") {
  const auto k33 = cat("K33");
  const auto fam = std::vector<Pattern>{catalog_pattern("K33")};
  const auto m = find_family_minor({k33, fam, {0, 8}, std::nullopt});
  REQUIRE(m);
  CHECK(m->contracted.empty());
  CHECK(m->deleted.empty());
  CHECK_FALSE(find_family_minor({icosahedron(), fam, {}, std::nullopt}));
  CHECK_FALSE(find_family_minor({wheel(6), k33_family(), {}, std::nullopt}));

  SUBCASE("first family member in list order wins") {
    const auto g = cat("K33_02");
    const auto hit = find_family_minor({g, k33_family(), {}, std::nullopt});
    REQUIRE(hit);
    CHECK(hit->pattern == "K33");
  }
  SUBCASE("family order") {
    std::vector<std::string> order;
    for (const auto& p : k33_k5_family()) order.push_back(p.name);
    CHECK(order == std::vector<std::string>{"K33", "K33_01", "K5", "K33_02", "K33_11"});
  }
  SUBCASE("every pair of every 3-connected non-planar 7-vertex graph") {
    for (const auto& g : three_connected_graphs(7)) {
      if (is_planar(g)) continue;
      for (const auto& [e, ee] : g.edges()) {
        for (const auto& [f, ff] : g.edges()) {
          if (f <= e) continue;
          const auto hit = find_family_minor({g, k33_family(), {e, f}, std::nullopt});
          CHECK(hit);
          if (hit) CHECK(verify_model(g, *hit));
        }
      }
    }
  }
  SUBCASE("triangle mode validation") {
    const auto g = complete(5);
    const std::array<EdgeId, 3> t{0, 1, 4};
    CHECK(find_family_minor({g, {catalog_pattern("K5")}, {0, 1, 4}, t}));
    CHECK_THROWS_AS(find_family_minor({g, {catalog_pattern("K5")}, {0, 1}, t}), Error);
    CHECK_THROWS_AS(find_family_minor({g, {catalog_pattern("K5")}, {0, 1, 9}, std::array<EdgeId, 3>{0, 1, 9}}), Error);
    CHECK_THROWS_AS(find_family_minor({g, {catalog_pattern("K5")}, {0, 1, 2}, std::array<EdgeId, 3>{0, 1, 2}}), Error);
  }
}

TEST_CASE("triangle preservation") {
  const auto k331 = catalog_pattern("K33_11");
  SUBCASE("K33_11 keeps each of its triangles without changes") {
    const auto g = cat("K33_11");
    for (const auto& t : triangles(g)) {
      const auto m = preserve_triangle_k331(g, t);
      REQUIRE(m);
      CHECK(m->contracted.empty());
      CHECK(m->deleted.empty());
      CHECK(keeps_triangle(g, *m, t, k331.graph));
    }
  }
  for (const std::string host : {"G5", "G6", "K33_12", "K33_22"}) {
    CAPTURE(host);
    const auto g = cat(host.c_str());
    for (const auto& t : triangles(g)) {
      CAPTURE(t);
      const auto m = preserve_triangle_k331(g, t);
      REQUIRE(m);
      CHECK(verify_model(g, *m));
      CHECK(keeps_triangle(g, *m, t, k331.graph));
      CHECK(oracle::brute_force_triangle_minor(g, k331.graph, t));
    }
  }
  SUBCASE("K33_02 has the size of K33_11 but no K33_11 minor") {
    const auto g = cat("K33_02");
    CHECK_FALSE(find_minor(g, k331));
    CHECK_FALSE(oracle::brute_force_minor(g, k331.graph));
  }
  SUBCASE("K33^{1,3} with T on its triangle side has no such model") {
    const auto e = catalog::build("K33_13");
    const std::array<EdgeId, 3> t = [&] {
      std::array<EdgeId, 3> x{e.edge("v1", "v2"), e.edge("v2", "v3"), e.edge("v1", "v3")};
      std::sort(x.begin(), x.end());
      return x;
    }();
    CHECK_FALSE(preserve_triangle_k331(e.graph, t));
    CHECK_FALSE(oracle::brute_force_triangle_minor(e.graph, k331.graph, t));
    CHECK(find_minor(e.graph, k331));
    // A triangle-preserving K5 model still exists.
    const auto m5 = preserve_triangle_k5(e.graph, t);
    REQUIRE(m5);
    CHECK(verify_model(e.graph, *m5));
    CHECK(keeps_triangle(e.graph, *m5, t, complete(5)));
  }
  SUBCASE("K5 targets") {
    const auto k5 = complete(5);
    for (const auto& t : triangles(k5)) {
      const auto m = preserve_triangle_k5(k5, t);
      REQUIRE(m);
      CHECK(m->contracted.empty());
      CHECK(m->deleted.empty());
    }
    const auto kk = catalog::build("K33_11");
    for (const auto& t : triangles(kk.graph)) {
      const auto m = preserve_triangle_k5(kk.graph, t);
      REQUIRE(m);
      CHECK(m->contracted == std::set<EdgeId>{kk.edge("u1", "v1")});
      CHECK(keeps_triangle(kk.graph, *m, t, k5));
    }
    const auto b = cat("FIG2_B");
    for (const auto& t : triangles(b)) {
      const auto m = preserve_triangle_k5(b, t);
      REQUIRE(m);
      CHECK(verify_model(b, *m));
      CHECK(keeps_triangle(b, *m, t, k5));
    }
  }
  SUBCASE("non-triangles are rejected") {
    CHECK_THROWS_AS(preserve_triangle_k331(cat("K33_11"), {0, 1, 2}), Error);
    CHECK_THROWS_AS(preserve_triangle_k5(complete(5), {0, 1, 9}), Error);
  }
}

TEST_CASE("planarity and obstructions") {
  CHECK(is_planar(complete(4)));
  CHECK_FALSE(obstruction(complete(4)));
  CHECK_FALSE(is_planar(complete(5)));
  const auto k5 = obstruction(complete(5));
  REQUIRE(k5);
  CHECK(k5->pattern == "K5");
  CHECK_FALSE(is_planar(cat("K33_02")));
  const auto o = obstruction(cat("K33_02"));
  REQUIRE(o);
  CHECK(o->pattern == "K33");
  CHECK(verify_model(cat("K33_02"), *o));
  CHECK(oracle::brute_force_minor(cat("K33_02"), cat("K33")));
  CHECK(is_planar(icosahedron()));
  CHECK_FALSE(is_planar(petersen()));
  auto multi = complete(4);
  multi.add_edge(50, 0, 1);
  multi.add_edge(51, 2, 2);
  CHECK(is_planar(multi));

  SUBCASE("agrees with minors on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : all_simple_graphs(n)) {
        CHECK(is_planar(g) == !obstruction(g).has_value());
      }
    }
  }
}

TEST_CASE("k5_iff_k331") {
  CHECK(k5_iff_k331(cat("K33_11")));
  CHECK(k5_iff_k331(cat("K33")));
  CHECK(k5_iff_k331(icosahedron()));
  CHECK(k5_iff_k331(petersen()));
  CHECK_THROWS_AS(k5_iff_k331(complete(5)), Error);
  CHECK_THROWS_AS(k5_iff_k331(cycle(5)), Error);
  CHECK_FALSE(find_minor(cat("K33"), catalog_pattern("K5")));
  CHECK_FALSE(find_minor(cat("K33"), catalog_pattern("K33_11")));
}
