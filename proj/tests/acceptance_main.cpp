// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <CLI11.hpp>
#include <iostream>

#include "acceptance/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rminor acceptance criteria"};
  rminor::acceptance::Options options;
  std::vector<int> ids;
  app.add_option("--seed", options.seed, "Seed for the sampled criteria");
  app.add_option("--criteria", ids, "Subset of criteria to run")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const auto results = rminor::acceptance::run_all(options, ids, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
