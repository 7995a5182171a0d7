#include <cstdlib>
#include <iostream>

#include "properties.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240917;
  bool ok = true;
  for (const auto& r : props::all_suites(seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << "\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
