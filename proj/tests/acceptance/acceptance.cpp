#include <chrono>
#include <cstdio>

#include "cycperm/verification.hpp"

using namespace cycperm;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimits[12] = {1, 300, 30, 120, 180, 180, 120, 600, 60, 300, 180, 300};

}  // namespace

int main() {
  int failures = 0;
  for (int c = 1; c <= 12; ++c) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      for (const auto& row : run_criterion(c)) {
        if (row.status == RowStatus::Mismatch) {
          ok = false;
          detail += " [" + row.id + ": expected " + row.expected + ", computed " + row.computed + "]";
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string(" [error: ") + e.what() + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kLimits[c - 1]) {
      ok = false;
      detail += " [time limit " + std::to_string(kLimits[c - 1]) + " s exceeded]";
    }
    std::printf("criterion %d: %s (%.2f s)%s\n", c, ok ? "PASS" : "FAIL", secs, detail.c_str());
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
