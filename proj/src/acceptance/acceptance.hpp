#pragma once

// The eight acceptance criteria as executable checks.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace rminor::acceptance {

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t node_cap = 10'000'000;
  /// Largest order for the exhaustive 3-connected sweeps (criteria 3, 4).
  int max_order = 8;
  /// Criterion 5 sample sizes.
  int random_graphs = 500;
  int pairs_per_graph = 10;
  /// Criterion 7 sample size.
  int oracle_hosts = 200;
};

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

Result run_criterion(int id, const Options& options);
/// Runs the given criteria (all when empty), printing one line per result
/// to `log` as it completes.
std::vector<Result> run_all(const Options& options, const std::vector<int>& ids = {}, std::ostream* log = nullptr);
std::string format(const Result& r);

}  // namespace rminor::acceptance
