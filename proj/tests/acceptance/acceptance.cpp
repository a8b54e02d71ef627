// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Failing checks are listed under their criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suites/suites.hpp"

using namespace annular::verify;

namespace {

struct Criterion {
  int id;
  const char* name;
  std::function<Reports()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "transitive factorization counts", [] { return gj(5, 7); }},
      {2, "annular chain counts", [] { return chains(6, 1); }},
      {3, "two-to-one map onto type A factorizations",
       [] { return two_to_one({{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}}); }},
      {4, "sign classes and fibers", [] { return plus_fibers(4); }},
      {5, "factorization bijections", [] { return bijections(5); }},
      {6, "marked poset chains", [] { return marked(5); }},
      {7, "summation identity", [] { return kk(30); }},
      {8, "type B noncrossing chains", [] { return reiner(5); }},
      {9, "absolute length oracle", [] { return length(4, 5); }},
      {10, "disconnected element counts", [] { return element_counts(3); }},
      {11, "chain encodings", [] { return encoding(3, 4); }},
      {12, "golden examples", [] { return goldens(); }},
  };

  bool ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Reports reports;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      reports.push_back(Report{"exception", "", "none", e.what(), false, 0});
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    const bool pass = !reports.empty() && passed == reports.size();
    ok = ok && pass;
    std::printf("%s %d. %s (%zu/%zu checks, %.2fs)\n", pass ? "PASS" : "FAIL", c.id, c.name, passed, reports.size(),
                secs);
    for (const auto& r : reports) {
      if (!r.pass) {
        std::printf("    %s [%s]: expected %s, got %s\n", r.check.c_str(), r.params.c_str(), r.expected.c_str(),
                    r.actual.c_str());
      }
    }
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
