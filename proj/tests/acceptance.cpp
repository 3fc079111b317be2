// Acceptance gate: runs the full property suite over the generated corpus
// and prints one PASS/FAIL line per criterion.  Exits nonzero if any
// criterion fails.  Defaults match the library's reference configuration.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "sgt/suite.hpp"

int main(int argc, char** argv) {
  int max_n = 6;
  unsigned seed = 7;
  bool inject = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--max-n" && i + 1 < argc) {
      max_n = std::atoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      seed = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else if (arg == "--inject") {
      inject = true;
    } else {
      std::fprintf(stderr, "usage: %s [--max-n N] [--seed S] [--inject]\n",
                   argv[0]);
      return 2;
    }
  }

  const sgt::SuiteResult result = sgt::run_suite(max_n, seed, inject);
  for (const auto& criterion : result.criteria) {
    std::printf("%-26s %s (%d checks)\n", criterion.name.c_str(),
                criterion.passed ? "PASS" : "FAIL", criterion.checks);
    for (const auto& note : criterion.failures) {
      std::fprintf(stderr, "  [%s] %s\n", criterion.name.c_str(), note.c_str());
    }
  }
  std::printf("total: %d checks across %zu criteria (max-n %d, seed %u)%s\n",
              result.total_checks(), result.criteria.size(), result.max_n,
              result.seed, result.injected ? " [injected fault]" : "");
  return result.all_passed() ? 0 : 1;
}
