// Acceptance harness: runs every property suite and prints one PASS/FAIL
// line per criterion.  Exit status 0 only when all of them pass.
//
// Usage: acceptance [figures_dir] [work_dir]
//   figures_dir  directory of figure configuration files (default "figures")
//   work_dir     scratch directory for the reproduction check (default: a
//                fresh directory under the system temp path)

#include <cstdio>

#include <alphaspline/checks.hpp>

int main(int argc, char** argv) {
  alphaspline::CheckOptions opt;
  if (argc > 1) opt.figures_dir = argv[1];
  if (argc > 2) opt.work_dir = argv[2];

  int failed = 0;
  try {
    const std::vector<alphaspline::CheckResult> results =
        alphaspline::run_acceptance_checks(opt);
    for (const alphaspline::CheckResult& r : results) {
      std::printf("[%2d] %s  %-34s %s\n", r.id, r.pass ? "PASS" : "FAIL",
                  r.name.c_str(), r.detail.c_str());
      for (const std::string& w : r.warnings)
        std::printf("          warning: %s\n", w.c_str());
      failed += !r.pass;
    }
    std::printf("%zu/%zu checks passed\n", results.size() - failed,
                results.size());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
