#pragma once

// JSON forms of minor models, roundedness reports and run configuration.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "rminor/minor.hpp"
#include "rminor/rounded.hpp"

namespace rminor {

/// `{pattern, contracted, deleted, iso:{"host": pattern}}`
nlohmann::ordered_json to_json(const MinorModel& m);
MinorModel model_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const Candidate& c);
nlohmann::ordered_json to_json(const RoundednessReport& r);

struct RunConfig {
  std::uint64_t node_cap = 10'000'000;
  std::uint64_t seed = 1;
  std::string output;
  int verbosity = 0;
};

/// Keys: node_cap, seed, output, verbosity. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::ordered_json to_json(const RunConfig& c);

}  // namespace rminor
