#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "polyred/acceptance.hpp"

namespace acc = polyred::acceptance;

namespace {

void print(const acc::CriterionResult& r, double seconds) {
  std::printf("%s  criterion %d: %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), seconds);
  for (const auto& s : r.subchecks)
    std::printf("      %s  %s: %s\n", s.passed ? "pass" : "FAIL", s.label.c_str(), s.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one line per criterion"};
  int criterion = 0;
  std::uint64_t seed = acc::kDefaultSeed;
  app.add_option("--criterion", criterion, "Run only this criterion")->check(CLI::Range(1, acc::kCriterionCount));
  app.add_option("--seed", seed, "Corpus seed");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (int id = 1; id <= acc::kCriterionCount; ++id) {
    if (criterion != 0 && id != criterion) continue;
    const auto start = std::chrono::steady_clock::now();
    const acc::CriterionResult r = acc::run_criterion(id, seed);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    print(r, s);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
