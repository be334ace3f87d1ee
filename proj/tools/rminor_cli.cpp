// rminor: command-line front end for minor search, roundedness and R12 checks.
//
// Exit codes: 0 found / pass, 1 searched and absent / verified fail, 2 usage
// or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance/acceptance.hpp"
#include "rminor/catalog.hpp"
#include "rminor/certificates.hpp"
#include "rminor/error.hpp"
#include "rminor/graph_io.hpp"
#include "rminor/matroid.hpp"
#include "rminor/minor.hpp"
#include "rminor/rounded.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rminor;

constexpr int kFound = 0;
constexpr int kAbsent = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> node_cap;
  RunConfig config;
};

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}

  void emit(const ordered_json& j, const std::string& text) const {
    if (g_.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
    if (!g_.config.output.empty()) write_json(g_.config.output, j);
  }

  static void write_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
  }

 private:
  const Globals& g_;
};

std::set<EdgeId> parse_ids(const std::string& list) {
  std::set<EdgeId> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty() && (item[0] == 'e' || item[0] == 'E')) item.erase(0, 1);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.insert(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError("bad element id '" + item + "'");
    }
  }
  return out;
}

SearchOptions search_options(const Globals& g) {
  SearchOptions o;
  o.node_cap = g.config.node_cap;
  return o;
}

std::string describe(const MinorModel& m) {
  std::ostringstream s;
  s << m.pattern << " minor: contract {";
  const char* sep = "";
  for (EdgeId e : m.contracted) s << sep << e, sep = ",";
  s << "} delete {";
  sep = "";
  for (EdgeId e : m.deleted) s << sep << e, sep = ",";
  s << "}";
  return s.str();
}

std::vector<Pattern> load_family(const std::string& which) {
  if (which == "a") return k33_family();
  if (which == "b") return k33_k5_family();
  std::ifstream in(which);
  if (!in) throw Error("family must be 'a', 'b' or a JSON file; cannot open " + which);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed family file: " + std::string(e.what()));
  }
  const nlohmann::json& list = j.is_object() ? j.at("patterns") : j;
  std::vector<Pattern> out;
  for (const auto& item : list) {
    if (item.is_string()) {
      out.push_back(catalog_pattern(item.get<std::string>()));
    } else {
      out.push_back({item.at("name").get<std::string>(), graph_from_json(item.at("graph"))});
    }
  }
  if (out.empty()) throw Error("family is empty");
  return out;
}

BinaryMatroid load_matroid(const std::string& arg) {
  if (arg == "r12" || arg == "R12") return r12();
  if (arg == "r10" || arg == "R10") return r10();
  if (catalog::contains(arg)) return cycle_matroid(catalog::build(arg).graph);
  std::ifstream in(arg);
  if (!in) throw Error("matroid must be r12, r10, a catalog graph name or a JSON matrix file: " + arg);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed matrix file: " + std::string(e.what()));
  }
  return matroid_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted graph-minor search and roundedness verification"};
  app.require_subcommand(1);
  // Subcommands pass unrecognised options up, so --json may follow them.
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print results as JSON");
  app.add_option("--config", g.config_path, "RunConfig JSON file")->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Seed for randomized generators");
  app.add_option("--node-cap", g.node_cap, "Search node cap per query")->check(CLI::PositiveNumber);

  int code = kFound;
  Output out(g);

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "Named graphs");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog names")->callback([&] {
    ordered_json j = catalog::names();
    std::string text;
    for (const auto& n : catalog::names()) text += n + "\n";
    out.emit(j, text);
  });
  std::string dump_name;
  auto* dump = catalog_cmd->add_subcommand("dump", "Print one catalog graph");
  dump->add_option("name", dump_name)->required();
  dump->callback([&] {
    const auto e = catalog::build(dump_name);
    ordered_json j = to_json(e.graph);
    j["name"] = e.name;
    ordered_json labels = ordered_json::object();
    for (const auto& [role, v] : e.labels) labels[role] = v;
    j["labels"] = labels;
    std::ostringstream s;
    s << e.name << ": " << e.graph.num_vertices() << " vertices, " << e.graph.num_edges() << " edges\n";
    for (const auto& [id, ed] : e.graph.edges()) s << "  " << id << ": " << ed.a << "-" << ed.b << "\n";
    out.emit(j, s.str());
  });

  // minor
  auto* minor_cmd = app.add_subcommand("minor", "Minor search and certificates");
  minor_cmd->require_subcommand(1);
  std::string host_path, pattern_name, require_list, cert_out;
  auto* find = minor_cmd->add_subcommand("find", "Search for a rooted minor");
  find->add_option("--host", host_path, "graph6 or JSON edge-list file")->required()->check(CLI::ExistingFile);
  find->add_option("--pattern", pattern_name, "Catalog pattern name")->required();
  find->add_option("--require", require_list, "Comma-separated edge ids that must be kept");
  find->add_option("--certificate", cert_out, "Write the model to this file");
  find->callback([&] {
    const auto host = read_graph_file(host_path);
    const auto pattern = catalog_pattern(pattern_name);
    const auto m = find_minor(host, pattern, parse_ids(require_list), search_options(g));
    ordered_json j = {{"pattern", pattern.name}, {"found", m.has_value()}};
    j["model"] = m ? to_json(*m) : ordered_json(nullptr);
    if (m && !cert_out.empty()) Output::write_json(cert_out, to_json(*m));
    out.emit(j, m ? describe(*m) : "no " + pattern.name + " minor");
    code = m ? kFound : kAbsent;
  });

  std::string triangle_list, target = "K5";
  auto* tri = minor_cmd->add_subcommand("triangle", "Minor keeping a triangle as a pattern triangle");
  tri->add_option("--host", host_path)->required()->check(CLI::ExistingFile);
  tri->add_option("--triangle", triangle_list, "Three edge ids")->required();
  tri->add_option("--target", target, "K5 or K33_11")->check(CLI::IsMember({"K5", "K33_11"}));
  tri->add_option("--certificate", cert_out);
  tri->callback([&] {
    const auto host = read_graph_file(host_path);
    const auto ids = parse_ids(triangle_list);
    if (ids.size() != 3) throw CLI::ValidationError("--triangle needs three distinct edge ids");
    std::array<EdgeId, 3> t{};
    std::copy(ids.begin(), ids.end(), t.begin());
    const auto m = target == "K5" ? preserve_triangle_k5(host, t, search_options(g))
                                  : preserve_triangle_k331(host, t, search_options(g));
    ordered_json j = {{"target", target}, {"triangle", t}, {"found", m.has_value()}};
    j["model"] = m ? to_json(*m) : ordered_json(nullptr);
    if (m && !cert_out.empty()) Output::write_json(cert_out, to_json(*m));
    out.emit(j, m ? describe(*m) : "no triangle-preserving " + target + " minor");
    code = m ? kFound : kAbsent;
  });

  std::string cert_in;
  auto* verify = minor_cmd->add_subcommand("verify", "Check a minor certificate");
  verify->add_option("certificate", cert_in)->required()->check(CLI::ExistingFile);
  verify->add_option("--host", host_path)->required()->check(CLI::ExistingFile);
  verify->callback([&] {
    std::ifstream in(cert_in);
    nlohmann::json cj;
    try {
      in >> cj;
    } catch (const nlohmann::json::exception& e) {
      throw Error("malformed certificate: " + std::string(e.what()));
    }
    const auto m = model_from_json(cj);
    const auto host = read_graph_file(host_path);
    Verification v;
    try {
      v = verify_model(host, m);
    } catch (const Error& e) {
      v = {false, e.what()};
    }
    out.emit({{"valid", v.ok}, {"diagnostic", v.diagnostic}}, v.ok ? "valid" : "invalid: " + v.diagnostic);
    code = v.ok ? kFound : kAbsent;
  });

  // planarity
  auto* planarity = app.add_subcommand("planarity", "Planarity testing");
  planarity->require_subcommand(1);
  std::string planar_path, planar_cert;
  auto* check = planarity->add_subcommand("check", "Test planarity; exit 1 when non-planar");
  check->add_option("graph", planar_path)->required()->check(CLI::ExistingFile);
  check->add_option("--certificate", planar_cert, "Write a K5/K33 obstruction model here");
  check->callback([&] {
    const auto graph = read_graph_file(planar_path);
    const bool planar = is_planar(graph);
    ordered_json j = {{"planar", planar}, {"obstruction", nullptr}};
    std::string text = planar ? "planar" : "non-planar";
    if (!planar) {
      const auto m = obstruction(graph, search_options(g));
      if (!m) throw Error("internal: non-planar graph without a K5/K33 minor");
      j["obstruction"] = to_json(*m);
      text += ", " + describe(*m);
      if (!planar_cert.empty()) Output::write_json(planar_cert, to_json(*m));
    }
    out.emit(j, text);
    code = planar ? kFound : kAbsent;
  });

  // rounded
  auto* rounded = app.add_subcommand("rounded", "2-roundedness verification");
  rounded->require_subcommand(1);
  std::string family = "a", report_path;
  auto* rverify = rounded->add_subcommand("verify", "Check every single-element extension and coextension");
  rverify->add_option("--family", family, "a, b, or a JSON list of pattern names / {name, graph}");
  rverify->add_option("--report", report_path, "Write the full report here");
  rverify->callback([&] {
    const auto report = verify_two_rounded(load_family(family), search_options(g));
    const ordered_json j = to_json(report);
    if (!report_path.empty()) Output::write_json(report_path, j);
    std::ostringstream s;
    s << "family {";
    for (std::size_t i = 0; i < report.family.size(); ++i) s << (i ? ", " : "") << report.family[i];
    s << "}: " << report.candidates.size() << " candidates, " << report.failures.size() << " failures -> "
      << (report.pass ? "pass" : "fail");
    for (const auto& f : report.failures) {
      s << "\n  candidate " << f.candidate << " (" << to_graph6(report.candidates[f.candidate].graph)
        << "): no minor using " << f.e << " and " << f.f;
    }
    out.emit(j, s.str());
    code = report.pass ? kFound : kAbsent;
  });

  // matroid
  auto* matroid = app.add_subcommand("matroid", "Binary matroids");
  matroid->require_subcommand(1);
  bool r12_verify = false;
  auto* r12_cmd = matroid->add_subcommand("r12", "Print R12; with --verify, check the R12 claims");
  r12_cmd->add_flag("--verify", r12_verify);
  r12_cmd->callback([&] {
    if (!r12_verify) {
      std::ostringstream s;
      for (const auto& row : r12().matrix()) {
        for (int x : row) s << x;
        s << "\n";
      }
      out.emit(to_json(r12()), s.str());
      return;
    }
    const auto report = verify_r12_claims();
    std::ostringstream s;
    for (const auto& c : report.checks) s << "(" << c.id << ") " << (c.pass ? "PASS" : "FAIL") << "  " << c.title << "\n";
    s << "verdict: " << (report.pass() ? "pass" : "fail");
    out.emit(to_json(report), s.str());
    code = report.pass() ? kFound : kAbsent;
  });
  std::string m_host = "r12", m_target;
  auto* mminor = matroid->add_subcommand("minor", "Search for a matroid minor keeping given elements");
  mminor->add_option("--host", m_host, "r12, r10, catalog graph name, or JSON matrix file");
  mminor->add_option("--target", m_target, "Same forms as --host")->required();
  mminor->add_option("--require", require_list, "Comma-separated element labels");
  mminor->callback([&] {
    const auto host = load_matroid(m_host);
    const auto t = load_matroid(m_target);
    const auto w = matroid_has_minor(host, t, parse_ids(require_list));
    ordered_json j = {{"host", m_host}, {"target", m_target}, {"found", w.has_value()}};
    std::string text = "no " + m_target + " minor";
    if (w) {
      ordered_json iso = ordered_json::object();
      for (const auto& [a, b] : w->iso) iso[std::to_string(a)] = b;
      j["contracted"] = w->contracted;
      j["deleted"] = w->deleted;
      j["iso"] = iso;
      std::ostringstream s;
      s << m_target << " minor: contract {";
      const char* sep = "";
      for (int e : w->contracted) s << sep << e, sep = ",";
      s << "} delete {";
      sep = "";
      for (int e : w->deleted) s << sep << e, sep = ",";
      s << "}";
      text = s.str();
    }
    out.emit(j, text);
    code = w ? kFound : kAbsent;
  });

  // verify-all
  auto* all = app.add_subcommand("verify-all", "Run the acceptance criteria");
  std::string criteria;
  bool quick = false;
  all->add_option("--criteria", criteria, "Comma-separated criterion ids (default all)");
  all->add_flag("--quick", quick, "Smaller samples and orders up to 7");
  all->callback([&] {
    acceptance::Options o;
    o.seed = g.config.seed;
    o.node_cap = g.config.node_cap;
    if (quick) {
      o.max_order = 7;
      o.random_graphs = 50;
      o.oracle_hosts = 50;
    }
    std::vector<int> ids;
    for (EdgeId id : parse_ids(criteria)) ids.push_back(id);
    for (int id : ids) {
      if (id < 1 || id > 8) throw CLI::ValidationError("criteria are numbered 1..8");
    }
    const auto results = acceptance::run_all(o, ids, g.json ? nullptr : &std::cout);
    bool pass = true;
    ordered_json j = ordered_json::array();
    for (const auto& r : results) {
      pass = pass && r.pass;
      j.push_back({{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    if (g.json) std::cout << ordered_json{{"criteria", j}, {"verdict", pass ? "pass" : "fail"}}.dump(2) << "\n";
    code = pass ? kFound : kAbsent;
  });

  // Global options are applied before any subcommand callback runs.
  app.parse_complete_callback([&] {
    if (!g.config_path.empty()) g.config = load_config(g.config_path);
    if (g.seed) g.config.seed = *g.seed;
    if (g.node_cap) g.config.node_cap = *g.node_cap;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
