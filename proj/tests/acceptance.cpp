// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "rttkit/suites.hpp"

using namespace rttkit;

namespace {

int failures = 0;

/// budget <= 0: no time limit.
void report(int id, bool ok, const std::string& what, double seconds, double budget) {
  const bool in_time = budget <= 0 || seconds < budget;
  if (budget > 0)
    std::printf("%s [%d] %s (%.1fs, budget %.0fs)\n", ok && in_time ? "PASS" : "FAIL", id, what.c_str(), seconds,
                budget);
  else
    std::printf("%s [%d] %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, what.c_str(), seconds);
  if (!ok || !in_time) ++failures;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

/// All selected cases pass and at least one was selected; returns their total seconds.
bool all_pass(const Report& r, const std::string& suite, const std::function<bool(const CaseResult&)>& pick,
              double& seconds, std::size_t& count) {
  bool ok = true;
  seconds = 0;
  count = 0;
  if (const SuiteResult* s = r.suite(suite))
    for (const auto& c : s->cases)
      if (pick(c)) {
        ++count;
        seconds += c.elapsed_ms / 1000;
        if (!c.passed) {
          std::printf("  failing case %s [%s] %s\n", c.key.c_str(), c.anchor.c_str(), c.detail.c_str());
          ok = false;
        }
      }
  return ok && count > 0;
}

}  // namespace

int main() {
  RunConfig cfg;  // defaults cover the acceptance grid
  const Report full = run(cfg);
  double secs = 0;
  std::size_t n = 0;

  bool ok = all_pass(full, "rtt", [](const CaseResult& c) { return c.anchor == "rrt2" && !c.negative_control; },
                     secs, n);
  report(1, ok && n == 2 * 3 * 3, "RTT relation for T, twisted T and T^, N in {2,3}, L in {1,2,3}", secs, 60);

  ok = all_pass(full, "qdet",
                [](const CaseResult& c) {
                  return contains(c.key, "/inverse") || contains(c.key, "/center") || contains(c.key, "/vacuum");
                },
                secs, n);
  report(2, ok, "inverse monodromy, qdet centrality and qdet vacuum eigenvalue", secs, 60);

  ok = all_pass(full, "qdet",
                [](const CaseResult& c) { return contains(c.key, "/hat-vacuum") || contains(c.key, "/hat-alpha"); },
                secs, n);
  report(3, ok, "hatted eigenvalues and the alpha shift at 10 random points", secs, 10);

  ok = all_pass(full, "gauss", [](const CaseResult& c) { return !contains(c.key, "/hat-frame"); }, secs, n);
  report(4, ok, "Gauss frame, tilde inverses, exchange/induction relations, multiple commutators", secs, 300);

  ok = all_pass(full, "gauss", [](const CaseResult& c) { return contains(c.key, "/hat-frame"); }, secs, n);
  report(5, ok, "normal-ordered hat frame equals the decomposition of T^", secs, 120);

  ok = all_pass(full, "theorem1", [](const CaseResult&) { return true; }, secs, n);
  {
    // Controls must actually have fired somewhere, not only been skipped.
    bool sign = false, f = false;
    for (const auto& c : full.suite("theorem1")->cases)
      if (c.negative_control && c.passed && !c.skipped) {
        sign = sign || contains(c.key, "drop-sign");
        f = f || contains(c.key, "drop-f");
      }
    ok = ok && sign && f;
  }
  report(6, ok, "Theorem 1 and its dual on the full grid; sign and f controls fail", secs, 600);

  ok = all_pass(full, "scalar", [](const CaseResult&) { return true; }, secs, n);
  {
    double largest = 0;
    for (const auto& c : full.suite("scalar")->cases) largest = std::max(largest, c.elapsed_ms / 1000);
    report(7, ok, "W extraction with held-out reconstruction, WW1, ZZ1 and the product identity (largest case)",
           largest, 900);
  }

  {
    RunConfig small;
    small.l = {1, 2};
    small.theorem1_max_n2 = 2;
    small.scalar_max_n2 = 1;
    small.scalar_max_set = 1;
    const auto start = std::chrono::steady_clock::now();
    const bool same = run(cfg).to_json(false) == full.to_json(false);
    bool mutations = true;
    for (const auto& [key, target] : mutation_keys()) {
      RunConfig m = small;
      m.mutate = key;
      const Report r = run(m);
      for (const auto& s : r.suites)
        if (s.passed() == (s.name == target)) {
          std::printf("  mutation %s: suite %s %s\n", key.c_str(), s.name.c_str(), s.passed() ? "passed" : "failed");
          mutations = false;
        }
    }
    report(8, same && mutations, "same seed gives an identical report; each mutation fails its target suite",
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 0);
  }
  return failures == 0 ? 0 : 1;
}
