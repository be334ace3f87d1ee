#include "rminor/certificates.hpp"

#include <fstream>

#include "rminor/error.hpp"
#include "rminor/graph_io.hpp"

namespace rminor {

using nlohmann::ordered_json;

ordered_json to_json(const MinorModel& m) {
  ordered_json iso = ordered_json::object();
  for (const auto& [h, p] : m.iso) iso[std::to_string(h)] = p;
  return {{"pattern", m.pattern}, {"contracted", m.contracted}, {"deleted", m.deleted}, {"iso", iso}};
}

MinorModel model_from_json(const nlohmann::json& j) {
  try {
    MinorModel m;
    m.pattern = j.at("pattern").get<std::string>();
    m.contracted = j.at("contracted").get<std::set<EdgeId>>();
    m.deleted = j.at("deleted").get<std::set<EdgeId>>();
    // iso is {"host": pattern}; a list of [host, pattern] pairs is also accepted.
    const auto& iso = j.at("iso");
    if (iso.is_object()) {
      for (const auto& [key, value] : iso.items()) {
        std::size_t used = 0;
        const VertexId h = std::stoi(key, &used);
        if (used != key.size()) throw Error("bad host vertex '" + key + "' in iso");
        m.iso[h] = value.get<VertexId>();
      }
    } else {
      for (const auto& pair : iso) {
        const auto [h, p] = pair.get<std::pair<VertexId, VertexId>>();
        if (!m.iso.emplace(h, p).second) throw Error("duplicate host vertex in iso");
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

ordered_json to_json(const Candidate& c) {
  ordered_json j;
  j["parent"] = c.parent;
  j["kind"] = c.kind == CandidateKind::Extension ? "extension" : "coextension";
  j["element"] = c.element;
  if (c.split) {
    j["split"] = {{"vertex", c.split->vertex},
                  {"part_a", c.split->part_a},
                  {"part_b", c.split->part_b},
                  {"new_edge", c.split->new_edge}};
  }
  j["graph"] = to_json(c.graph);
  j["graph6"] = to_graph6(c.graph);
  return j;
}

ordered_json to_json(const RoundednessReport& r) {
  ordered_json candidates = ordered_json::array();
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    ordered_json c = to_json(r.candidates[i]);
    c["index"] = i;
    ordered_json checks = ordered_json::array();
    for (const auto& k : r.checks.at(i)) {
      checks.push_back({{"f", k.f}, {"pattern", k.pattern ? ordered_json(*k.pattern) : ordered_json(nullptr)}});
    }
    c["checks"] = checks;
    candidates.push_back(std::move(c));
  }
  ordered_json failures = ordered_json::array();
  for (const auto& f : r.failures) failures.push_back({{"candidate", f.candidate}, {"e", f.e}, {"f", f.f}});
  return {{"family", r.family},
          {"filter", "only simple 3-connected candidates are examined"},
          {"candidates", candidates},
          {"failures", failures},
          {"verdict", r.pass ? "pass" : "fail"}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("config must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "node_cap") {
        c.node_cap = value.get<std::uint64_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "output") {
        c.output = value.get<std::string>();
      } else if (key == "verbosity") {
        c.verbosity = value.get<int>();
      } else {
        throw Error("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed config: ") + e.what());
  }
  if (c.node_cap == 0) throw Error("node_cap must be positive");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

ordered_json to_json(const RunConfig& c) {
  return {{"node_cap", c.node_cap}, {"seed", c.seed}, {"output", c.output}, {"verbosity", c.verbosity}};
}

}  // namespace rminor
