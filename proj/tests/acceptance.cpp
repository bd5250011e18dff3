// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "quadpencil/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using qp::verify::run_suite;

constexpr std::uint64_t kSeed = 42;
constexpr double kTotalBudget = 120.0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int number;
  const char* title;
  const char* suite;
  std::size_t min_cases;    // the case count the criterion asks for
  double time_limit = 0;    // seconds; 0 = only the global budget
};

bool report(int number, const std::string& title, bool ok, const std::string& detail) {
  std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  (" << detail << ")"
            << std::endl;
  return ok;
}

bool run_criterion(const Criterion& c) {
  auto t0 = Clock::now();
  auto out = run_suite({kSeed, c.suite, 1});
  double secs = seconds_since(t0);
  std::ostringstream detail;
  detail << out.cases << " cases, " << out.failures.size() << " failures, " << secs << " s";
  bool ok = out.passed() && out.cases >= c.min_cases && (c.time_limit == 0 || secs <= c.time_limit);
  if (out.cases < c.min_cases) detail << ", expected at least " << c.min_cases << " cases";
  if (c.time_limit > 0 && secs > c.time_limit) detail << ", over the " << c.time_limit << " s limit";
  if (!out.failures.empty()) detail << "; first: case " << out.failures.front().index << ": " << out.failures.front().detail;
  return report(c.number, c.title, ok, detail.str());
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_verify_to(const std::filesystem::path& out) {
  std::string cmd = std::string(QPENCIL_PATH) + " verify --seed 42 > " + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool determinism() {
  auto t0 = Clock::now();
  auto dir = std::filesystem::temp_directory_path() / "qpencil_acceptance";
  std::filesystem::create_directories(dir);
  int c1 = run_verify_to(dir / "run1.json"), c2 = run_verify_to(dir / "run2.json");
  std::string a = slurp(dir / "run1.json"), b = slurp(dir / "run2.json");
  bool same = !a.empty() && a == b;
  std::ostringstream detail;
  detail << a.size() << " bytes, " << (same ? "identical" : "different") << ", exit codes " << c1 << "/" << c2 << ", "
         << seconds_since(t0) << " s";
  return report(10, "two runs of `verify --seed 42` produce byte-identical reports", same && c1 == 0 && c2 == 0,
                detail.str());
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  const Criterion criteria[] = {
      {1, "Hilbert reciprocity over {inf} and the primes dividing 2ab", "hilbert-reciprocity", 500, 10},
      {2, "Witt index formula equals the Hensel brute force, dim <= 5, p in {2,3,5,7}", "witt-oracle", 149792, 30},
      {3, "singular members satisfy multiplicity >= N - rank", "lemma-rank-multiplicity", 100},
      {4, "dual-quadric tangency correspondence over F_3, F_5 in P^2, P^3", "dual-quadric", 80},
      {5, "hyperbolic splitting iff isotropic subspace over F_3, dim <= 8, m <= 2", "hyperbolic-splitting", 1530},
      {6, "taxonomy fixtures get their tags; four rank-6 decomposition is orthogonal", "taxonomy", 7},
      {7, "diagonal rank-6 family: t^2 | chi, residue -1, obstruction; regular pencils trivial", "residue-example", 3},
      {8, "Mordell sweep finds |n+ - n-| <= 2", "mordell-sweep", 50},
      {9, "odd-degree point over F_27 implies an F_3-point (P^3 over F_3)", "amer-brumer", 50},
  };
  bool all = true;
  for (auto& c : criteria) all = run_criterion(c) && all;
  all = determinism() && all;
  double total = seconds_since(t0);
  bool in_budget = total <= kTotalBudget;
  std::cout << "total: " << total << " s (budget " << kTotalBudget << " s) " << (in_budget ? "ok" : "EXCEEDED") << std::endl;
  return all && in_budget ? 0 : 1;
}
