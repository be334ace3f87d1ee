#include "doctest.h"

#include "helpers.hpp"
#include "rminor/matroid.hpp"
#include "rminor/minor.hpp"

using namespace rminor;
using namespace testing;

namespace {

MatroidIso identity(const BinaryMatroid& m) {
  MatroidIso id;
  for (int e : m.elements()) id[e] = e;
  return id;
}

bool same(const BinaryMatroid& a, const BinaryMatroid& b) { return is_matroid_isomorphism(a, b, identity(a)); }

std::vector<std::set<int>> random_sets(std::mt19937_64& rng, const BinaryMatroid& m, int count) {
  std::vector<std::set<int>> out;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < count; ++i) {
    std::set<int> s;
    for (int e : m.elements()) {
      if (coin(rng)) s.insert(e);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("R12 and R10") {
  const auto m = r12();
  CHECK(m.size() == 12);
  CHECK(m.rank() == 6);
  CHECK(m.basis() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(r10().size() == 10);
  CHECK(r10().rank() == 5);

  const auto c1 = contract(m, 1);
  CHECK(c1.rank() == 5);
  CHECK(c1.size() == 11);
  CHECK_FALSE(c1.has(1));
  const auto s = simplify_matroid(c1);
  CHECK(s.size() == 10);
  CHECK(s.rank() == 5);
  // 5 and 9 are parallel in R12/1; the smaller label survives.
  CHECK(c1.column(5) == c1.column(9));
  CHECK(s.has(5));
  CHECK_FALSE(s.has(9));

  CHECK(matroid_isomorphic(s, cycle_matroid(cat("K33_01"))));
  // Ten elements cannot match the eleven of M(K33^{0,2}).
  CHECK_FALSE(matroid_isomorphic(s, cycle_matroid(cat("K33_02"))));

  CHECK(matroid_isomorphic(m, dual(m)));
  const auto pinned = matroid_isomorphic(m, dual(m), {{1, 7}});
  REQUIRE(pinned);
  CHECK(pinned->at(1) == 7);
  CHECK(is_matroid_isomorphism(m, dual(m), *pinned));
  CHECK(matroid_isomorphic(r10(), dual(r10())));
}

TEST_CASE("R12 claims report") {
  const auto report = verify_r12_claims();
  REQUIRE(report.checks.size() == 6);
  for (int i : {0, 1, 3, 4, 5}) {
    CAPTURE(i);
    CHECK(report.checks[i].pass);
  }
  // si(R12/1) is M(K33^{0,1}), so the claimed match with M(K33^{0,2}) fails.
  CHECK_FALSE(report.checks[2].pass);
  CHECK_FALSE(report.pass());
  const auto j = to_json(report);
  CHECK(j["checks"].size() == 6);
}

TEST_CASE("construction and errors") {
  const BinaryMatroid m({1, 2, 3}, std::vector<std::vector<int>>{{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
  CHECK(m.rank() == 2);
  CHECK(m.rank_of({1, 2, 3}) == 2);
  CHECK(m.rank_of({3}) == 1);
  CHECK_THROWS_AS(m.index_of(9), Error);
  CHECK_THROWS_AS(contract(m, 9), Error);
  CHECK_THROWS_AS(BinaryMatroid({1, 1}, std::vector<std::vector<int>>{{1, 0}}), Error);
  CHECK_THROWS_AS(BinaryMatroid({1, 2}, std::vector<std::vector<int>>{{1, 0, 1}}), Error);
  CHECK_THROWS_AS(BinaryMatroid({1, 2}, std::vector<std::vector<int>>{{1, 2}}), Error);
  CHECK_THROWS_AS(matroid_has_minor(r12(), r10(), {99}), Error);
}

TEST_CASE("circuits") {
  const auto k4 = cycle_matroid(complete(4));
  const auto cs = circuits(k4);
  // Four triangles and three 4-cycles.
  CHECK(cs.size() == 7);
  for (const auto& c : cs) {
    CHECK(k4.rank_of(c) == static_cast<int>(c.size()) - 1);
    for (int e : c) {
      auto smaller = c;
      smaller.erase(e);
      CHECK(k4.rank_of(smaller) == static_cast<int>(smaller.size()));
    }
  }
}

TEST_CASE("minor operations") {
  std::mt19937_64 rng(7);
  const auto m = r12();

  SUBCASE("dual is an involution and swaps rank") {
    for (const auto& x : {m, r10(), cycle_matroid(cat("G3")), cycle_matroid(petersen())}) {
      CHECK(dual(x).rank() == x.size() - x.rank());
      CHECK(same(dual(dual(x)), x));
    }
  }
  SUBCASE("contraction is independent of row operations") {
    std::vector<BinaryMatroid::Row> rows = m.rows();
    for (std::size_t i = 1; i < rows.size(); ++i) rows[i] ^= rows[i - 1];
    std::reverse(rows.begin(), rows.end());
    const BinaryMatroid mixed(m.elements(), rows);
    CHECK(mixed == m);
    for (int e : m.elements()) CHECK(contract(mixed, e) == contract(m, e));
  }
  SUBCASE("contract and delete commute and are dual") {
    for (int e : m.elements()) {
      for (int f : m.elements()) {
        if (e == f) continue;
        CHECK(same(delete_element(contract(m, e), f), contract(delete_element(m, f), e)));
        CHECK(same(contract_delete(m, {e}, {f}), delete_element(contract(m, e), f)));
      }
      CHECK(same(dual(contract(m, e)), delete_element(dual(m), e)));
    }
  }
  SUBCASE("rank is submodular") {
    const auto sets = random_sets(rng, m, 40);
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        std::set<int> u = a, i;
        u.insert(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(i, i.end()));
        CHECK(m.rank_of(u) + m.rank_of(i) <= m.rank_of(a) + m.rank_of(b));
      }
    }
  }
  SUBCASE("graph minors and matroid minors agree") {
    for (const auto& name : catalog::names()) {
      CAPTURE(name);
      const auto g = catalog::build(name).graph;
      const auto mg = cycle_matroid(g);
      CHECK(mg.size() == static_cast<int>(g.num_edges()));
      CHECK(mg.rank() == static_cast<int>(g.num_vertices()) - 1);
      for (const auto& [e, ed] : g.edges()) {
        CHECK(same(cycle_matroid(delete_edge(g, e)), delete_element(mg, e)));
        CHECK(same(cycle_matroid(contract_edge(g, e)), contract(mg, e)));
      }
    }
  }
  SUBCASE("relabelled graphs give isomorphic matroids") {
    for (const char* name : {"K33_11", "G2", "G6"}) {
      const auto g = cat(name);
      const auto h = relabel(g, rng);
      const auto iso = matroid_isomorphic(cycle_matroid(g), cycle_matroid(h));
      REQUIRE(iso);
      CHECK(is_matroid_isomorphism(cycle_matroid(g), cycle_matroid(h), *iso));
    }
    CHECK_FALSE(matroid_isomorphic(cycle_matroid(cat("K33_02")), cycle_matroid(cat("K33_11"))));
  }
}

TEST_CASE("matroid minors") {
  const auto fc = fc_family();
  REQUIRE(fc.size() == 4);
  const auto r = r10();
  const auto k33 = matroid_has_minor(r, fc[0]);
  REQUIRE(k33);
  CHECK(k33->deleted.size() == 1);
  CHECK(k33->contracted.empty());
  for (std::size_t i = 1; i < fc.size(); ++i) CHECK_FALSE(matroid_has_minor(r, fc[i]));

  const auto mk5 = cycle_matroid(complete(5));
  const auto self = matroid_has_minor(mk5, mk5);
  REQUIRE(self);
  CHECK(self->contracted.empty());
  CHECK(self->deleted.empty());

  SUBCASE("planar wheels have no M(K5) or M(K33) minor") {
    for (int n : {4, 5}) {
      const auto w = cycle_matroid(wheel(n));
      CHECK(matroid_isomorphic(w, dual(w)));
      CHECK_FALSE(matroid_has_minor(dual(w), {mk5, fc[0]}));
    }
  }
  SUBCASE("R12 pairs") {
    const auto hit = matroid_has_minor(r12(), fc, {3, 8});
    REQUIRE(hit);
    const auto minor = contract_delete(r12(), hit->contracted, hit->deleted);
    CHECK(is_matroid_isomorphism(minor, fc[hit->target], hit->iso));
    CHECK(minor.has(3));
    CHECK(minor.has(8));
  }
  SUBCASE("graphic minors follow graph minors") {
    const auto g = cat("G5");
    CHECK(matroid_has_minor(cycle_matroid(g), cycle_matroid(cat("K33_11"))).has_value() ==
          find_minor(g, catalog_pattern("K33_11")).has_value());
  }
}

TEST_CASE("json") {
  const auto m = r12();
  const auto j = to_json(m);
  CHECK(j["rank"] == 6);
  CHECK(matroid_from_json(nlohmann::json::parse(j.dump())) == m);
  const auto bare = nlohmann::json::parse("[[1,0,1],[0,1,1]]");
  const auto b = matroid_from_json(bare);
  CHECK(b.elements() == std::vector<int>{1, 2, 3});
  CHECK(b.rank() == 2);
  CHECK_THROWS_AS(matroid_from_json(nlohmann::json::parse("{\"rows\": 3}")), Error);
}
