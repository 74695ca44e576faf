#include <CLI11.hpp>
#include <iostream>

#include "qci/regression.hpp"

int main(int argc, char** argv) {
  qci::RegressionOptions opts;
  bool verbose = false;
  std::vector<int> only;
  CLI::App app{"Runs the acceptance criteria, one line per criterion"};
  app.add_option("--seed", opts.seed, "master seed");
  app.add_option("--prime", opts.prime, "prime for the randomized criteria");
  app.add_option("--trials", opts.quadric_trials, "trials per n in the quadrics experiment");
  app.add_option("--instances", opts.property_instances, "random instances for the property suites");
  app.add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, qci::criterion_count));
  app.add_flag("-v,--verbose", verbose, "print every sub-check");
  CLI11_PARSE(app, argc, argv);

  if (only.empty())
    for (int i = 1; i <= qci::criterion_count; ++i) only.push_back(i);
  int failed = 0;
  for (int id : only) {
    const auto r = qci::run_criterion(id, opts);
    std::cout << qci::summary_line(r) << '\n';
    for (const auto& d : r.details)
      if (verbose || d.rfind("FAIL", 0) == 0) std::cout << "        " << d << '\n';
    std::cout.flush();
    failed += !r.pass;
  }
  std::cout << (only.size() - failed) << " of " << only.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
