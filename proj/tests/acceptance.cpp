// Acceptance suite: runs every criterion at full scale and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.
#include <cstdlib>
#include <iostream>

#include "skeinlab/verify.hpp"

int main(int argc, char** argv) {
  uint64_t seed = 20240817;
  if (const char* env = std::getenv("SKEINLAB_SEED")) seed = std::strtoull(env, nullptr, 10);
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  skeinlab::RunReport report = skeinlab::run_suite("all", seed, 1);
  std::cout << skeinlab::report_text(report);
  return report.ok() ? 0 : 1;
}
