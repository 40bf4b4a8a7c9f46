// Acceptance battery: one PASS/FAIL line per criterion.
#include "ultragrowth/report.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

using namespace ultragrowth;

namespace {

// seconds allowed per criterion
constexpr std::array<double, 11> kBudget = {10, 1, 5, 5, 5, 5, 10, 10, 1, 5, 60};

std::string capture(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

void line(int id, bool pass, const std::string& key, double secs, const std::string& detail) {
  std::printf("criterion %2d: %s  %-28s %7.3fs  (budget %gs)%s%s\n", id, pass ? "PASS" : "FAIL",
              key.c_str(), secs, kBudget[id - 1], detail.empty() ? "" : "  ", detail.c_str());
}

}  // namespace

int main() {
  int failed = 0;
  for (int id = 1; id <= 10; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    const ClaimResult r = run_claim(id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = r.verdict.holds() && secs <= kBudget[id - 1];
    std::string detail = r.verdict.detail;
    if (r.verdict.holds() && !pass) detail = "over time budget";
    line(id, pass, r.key, secs, detail);
    failed += !pass;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(ULTRAGROWTH_CLI) + " report --suite paper-claims 2>/dev/null";
  int s1 = 0, s2 = 0;
  const std::string a = capture(cmd, s1);
  const std::string b = capture(cmd, s2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool same = !a.empty() && a == b && s1 == 0 && s2 == 0;
  line(11, same && secs <= kBudget[10], "determinism", secs,
       same ? std::to_string(a.size()) + " identical bytes" : "outputs differ or report failed");
  failed += !(same && secs <= kBudget[10]);

  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
