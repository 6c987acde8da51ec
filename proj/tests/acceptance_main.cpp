#include <iostream>

#include <CLI11.hpp>

#include "isograph/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria of the isograph library"};
  isograph::AcceptanceOptions opts;
  app.add_flag("--quick", opts.quick, "Only the D4 isospectral pair");
  app.add_option("--only", opts.only, "Criterion ids to run");
  app.add_option("--seed", opts.seed, "Seed of the random draws");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  auto results = isograph::run_acceptance(opts, [&](const isograph::CriterionResult& r) {
    std::cout << isograph::format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  });
  std::cout << results.size() - failed << " of " << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
