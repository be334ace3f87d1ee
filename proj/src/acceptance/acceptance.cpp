#include "acceptance/acceptance.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "oracle/oracles.hpp"
#include "rminor/catalog.hpp"
#include "rminor/generate.hpp"
#include "rminor/graph_io.hpp"
#include "rminor/matroid.hpp"
#include "rminor/minor.hpp"
#include "rminor/rounded.hpp"

namespace rminor::acceptance {

namespace {

struct Tally {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

bool iso(const LabeledMultigraph& a, const LabeledMultigraph& b) { return are_isomorphic(a, b).has_value(); }

LabeledMultigraph si(const LabeledMultigraph& g) { return simplify(g).graph; }

LabeledMultigraph contract_roles(const catalog::Entry& e, const char* a, const char* b) {
  return contract_edge(e.graph, e.edge(a, b));
}

Result catalog_identities(const Options&) {
  Tally t;
  const auto k331 = catalog::build("K33_11");
  const auto g1 = catalog::build("G1");
  const auto g2 = catalog::build("G2");
  const auto g4 = catalog::build("G4");
  const auto k33 = catalog::build("K33").graph;
  const auto k3301 = catalog::build("K33_01").graph;
  const std::vector<std::pair<std::string, bool>> items = {
      {"K33_11/u1v1 = K5", iso(si(contract_roles(k331, "u1", "v1")), catalog::build("K5").graph)},
      {"G1/u3w2 = K33", iso(si(contract_roles(g1, "u3", "w2")), k33)},
      {"G1/u3v1 = K33_01", iso(si(contract_roles(g1, "u3", "v1")), k3301)},
      {"G2 = G1 + v1w1", iso(g2.graph, add_edge(g1.graph, g1.vertex("v1"), g1.vertex("w1")))},
      {"si(G4/u3w2) = K33_01", iso(si(contract_roles(g4, "u3", "w2")), k3301)},
  };
  for (const auto& [name, ok] : items) {
    t.detail << name << (ok ? " ok" : " FAILED") << "; ";
    if (!ok) t.pass = false;
  }
  return {1, "catalog identities", t.pass, t.detail.str(), 0};
}

Result two_rounded(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  for (const auto& [label, family] : {std::pair{"a", k33_family()}, std::pair{"b", k33_k5_family()}}) {
    const auto report = verify_two_rounded(family, so);
    std::size_t pairs = 0;
    for (const auto& c : report.checks) pairs += c.size();
    t.detail << "family " << label << ": " << report.candidates.size() << " candidates, " << pairs << " pairs, "
             << report.failures.size() << " failures; ";
    if (!report.pass) t.fail(std::string("family ") + label + " has failures");
    // Completeness: every raw extension/coextension is represented.
    for (const auto& p : family) {
      std::vector<Candidate> raw = enumerate_extensions_raw(p);
      for (auto& c : enumerate_coextensions_raw(p)) raw.push_back(std::move(c));
      for (const auto& c : raw) {
        bool found = false;
        for (const auto& d : report.candidates) {
          if (d.parent == c.parent && d.kind == c.kind && same_rooted_class(c, d)) {
            found = true;
            break;
          }
        }
        if (!found) t.fail("unrepresented candidate of " + p.name);
      }
    }
  }
  return {2, "families (a) and (b) are 2-rounded", t.pass, t.detail.str(), 0};
}

const std::vector<LabeledMultigraph>& three_connected(int n) {
  static std::map<int, std::vector<LabeledMultigraph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, three_connected_graphs(n)).first;
  return it->second;
}

Result k5_iff_k331_sweep(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  const auto k5 = catalog::build("K5").graph;
  std::size_t checked = 0;
  for (int n = 1; n <= o.max_order; ++n) {
    const auto total = all_simple_graphs(n).size();
    if (total != oracle::burnside_graph_count(n)) t.fail("graph count mismatch at n=" + std::to_string(n));
    const auto& graphs = three_connected(n);
    if (n <= 7 && graphs.size() != oracle::burnside_three_connected_count(n)) {
      t.fail("3-connected count mismatch at n=" + std::to_string(n));
    }
    t.detail << "n=" << n << ": " << total << " graphs, " << graphs.size() << " 3-connected; ";
    for (const auto& g : graphs) {
      if (iso(g, k5)) continue;
      ++checked;
      if (!k5_iff_k331(g, so)) t.fail("k5_iff_k331 false on " + std::to_string(n) + "-vertex graph");
    }
  }
  t.detail << checked << " graphs checked";
  return {3, "K5-minor iff K33^{1,1}-minor on 3-connected graphs", t.pass, t.detail.str(), 0};
}

bool keeps_triangle(const LabeledMultigraph& host, const MinorModel& m, const std::array<EdgeId, 3>& tri) {
  const auto minor = apply_model(host, m);
  for (EdgeId e : tri) {
    if (!minor.has_edge(e)) return false;
  }
  const auto ts = triangles(minor);
  return std::find(ts.begin(), ts.end(), tri) != ts.end();
}

Result triangle_sweep(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  const auto k331 = catalog_pattern("K33_11");
  const auto k5 = catalog_pattern("K5");
  std::size_t hosts331 = 0, hosts5 = 0, queries = 0, fail331 = 0, fail5 = 0;
  std::string first331;
  for (int n = 4; n <= o.max_order; ++n) {
    for (const auto& g : three_connected(n)) {
      const bool has331 = find_minor(g, k331, {}, so).has_value();
      const bool has5 = find_minor(g, k5, {}, so).has_value();
      hosts331 += has331;
      hosts5 += has5;
      for (const auto& tri : triangles(g)) {
        if (has331) {
          ++queries;
          const auto m = preserve_triangle_k331(g, tri, so);
          if (!m || !verify_model(g, *m) || !keeps_triangle(g, *m, tri)) {
            if (fail331++ == 0) first331 = to_graph6(g);
            t.pass = false;
          }
        }
        if (has5) {
          ++queries;
          const auto m = preserve_triangle_k5(g, tri, so);
          if (!m || !verify_model(g, *m) || !keeps_triangle(g, *m, tri)) {
            ++fail5;
            t.pass = false;
          }
        }
      }
    }
  }
  t.detail << hosts331 << " hosts with a K33_11 minor, " << hosts5 << " with a K5 minor, " << queries
           << " triangle queries; K33_11 failures: " << fail331;
  if (fail331) t.detail << " (first host " << first331 << ")";
  t.detail << "; K5 failures: " << fail5;
  return {4, "triangle-preserving K33^{1,1} and K5 minors", t.pass, t.detail.str(), 0};
}

Result pair_sampling(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  Rng rng(o.seed);
  const auto family = k33_family();
  const auto k5 = catalog::build("K5").graph;
  int exempt = 0, queries = 0;
  for (int i = 0; i < o.random_graphs; ++i) {
    const auto g = random_nonplanar_three_connected(rng, 12);
    if (is_planar(g)) t.fail("generator produced a planar graph");
    const std::vector<std::pair<EdgeId, Edge>> edges(g.edges().begin(), g.edges().end());
    const bool is_k5 = iso(g, k5);
    for (int k = 0; k < o.pairs_per_graph; ++k) {
      const int a = uniform(rng, 0, static_cast<int>(edges.size()) - 1);
      int b = uniform(rng, 0, static_cast<int>(edges.size()) - 2);
      if (b >= a) ++b;
      if (is_k5) {
        ++exempt;
        continue;
      }
      ++queries;
      const RootedQuery q{g, family, {edges[a].first, edges[b].first}, std::nullopt};
      const auto m = find_family_minor(q, so);
      if (!m || !verify_model(g, *m)) t.fail("no family minor through a random pair");
    }
  }
  t.detail << queries << " queries, " << exempt << " exempt (host is K5)";
  return {5, "random pairs lie in a family (a) minor", t.pass, t.detail.str(), 0};
}

Result r12_suite(const Options&) {
  Tally t;
  const auto report = verify_r12_claims();
  for (const auto& c : report.checks) {
    t.detail << "(" << c.id << ") " << (c.pass ? "pass" : "FAIL") << "; ";
  }
  return {6, "R12 claims", report.pass(), t.detail.str(), 0};
}

Result oracle_equivalence(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  static const std::vector<std::string> names = {"K33", "K33_01", "K33_02", "K33_11", "K5"};
  int agree = 0, found = 0, with_required = 0;
  for (int i = 0; i < o.oracle_hosts; ++i) {
    const auto host = random_host(rng, 12);
    const auto pattern = catalog_pattern(names[uniform(rng, 0, static_cast<int>(names.size()) - 1)]);
    std::set<EdgeId> required;
    if (uniform(rng, 0, 1) == 0 && host.num_edges() > 0) {
      const std::vector<std::pair<EdgeId, Edge>> edges(host.edges().begin(), host.edges().end());
      for (int k = uniform(rng, 1, 2); k > 0; --k) {
        required.insert(edges[uniform(rng, 0, static_cast<int>(edges.size()) - 1)].first);
      }
      ++with_required;
    }
    const auto m = find_minor(host, pattern, required, so);
    const bool expected = oracle::brute_force_minor(host, pattern.graph, required).has_value();
    bool ok = m.has_value() == expected;
    if (m) {
      ++found;
      ok = ok && verify_model(host, *m, pattern.graph);
      for (EdgeId e : required) ok = ok && !m->contracted.count(e) && !m->deleted.count(e);
    }
    if (ok) {
      ++agree;
    } else {
      t.fail("host " + std::to_string(i) + " vs " + pattern.name);
    }
  }
  t.detail << agree << "/" << o.oracle_hosts << " agree (" << found << " present, " << with_required
           << " with required edges)";
  return {7, "find_minor matches the brute-force oracle", t.pass, t.detail.str(), 0};
}

Result wagner_consistency(const Options& o) {
  Tally t;
  SearchOptions so;
  so.node_cap = o.node_cap;
  const auto graphs = all_simple_graphs(7);
  if (graphs.size() != 1044 || oracle::burnside_graph_count(7) != 1044) t.fail("7-vertex graph count");
  const auto k5 = catalog_pattern("K5");
  const auto k33 = catalog_pattern("K33");
  int agree = 0, planar = 0;
  for (const auto& g : graphs) {
    const bool p = is_planar(g);
    const bool minor = find_minor(g, k5, {}, so).has_value() || find_minor(g, k33, {}, so).has_value();
    planar += p;
    if (p != minor) {
      ++agree;
    } else {
      t.fail("disagreement on " + std::to_string(g.num_edges()) + "-edge graph");
    }
  }
  t.detail << agree << "/" << graphs.size() << " agree, " << planar << " planar";
  return {8, "planarity iff no K5 or K33 minor (7 vertices)", t.pass, t.detail.str(), 0};
}

}  // namespace

Result run_criterion(int id, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  switch (id) {
    case 1: r = catalog_identities(options); break;
    case 2: r = two_rounded(options); break;
    case 3: r = k5_iff_k331_sweep(options); break;
    case 4: r = triangle_sweep(options); break;
    case 5: r = pair_sampling(options); break;
    case 6: r = r12_suite(options); break;
    case 7: r = oracle_equivalence(options); break;
    case 8: r = wagner_consistency(options); break;
    default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Result> run_all(const Options& options, const std::vector<int>& ids, std::ostream* log) {
  std::vector<int> which = ids;
  if (which.empty()) which = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<Result> out;
  for (int id : which) {
    out.push_back(run_criterion(id, options));
    if (log) *log << format(out.back()) << std::endl;
  }
  return out;
}

std::string format(const Result& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  [" << r.detail << "] ("
    << r.seconds << " s)";
  return s.str();
}

}  // namespace rminor::acceptance
