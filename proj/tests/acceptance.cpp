#include <cstdio>
#include <exception>

#include "u3alg/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= u3alg::kCriterionCount; ++id) {
    try {
      const auto r = u3alg::run_criterion(id);
      std::printf("[%s] criterion %d: %s (%.2fs) -- %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                  r.detail.c_str());
      if (!r.pass) ++failed;
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %d: exception: %s\n", id, e.what());
      ++failed;
    }
  }
  std::printf("%d/%d criteria passed\n", u3alg::kCriterionCount - failed, u3alg::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
