#include <cstdlib>
#include <iostream>

#include "chaindepth/repro.hpp"

int main() {
  chaindepth::ReproConfig config;
  if (const char* jobs = std::getenv("DEPTH_JOBS")) config.jobs = static_cast<unsigned>(std::strtoul(jobs, nullptr, 10));
  chaindepth::ReproSuite suite(config);
  int failed = 0;
  for (const auto& r : suite.run_all()) {
    std::cout << chaindepth::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
