#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quadpencil/io.hpp"

namespace qp::verify {

using io::Json;
using Rng = std::mt19937_64;

struct CaseResult {
  bool passed = true;
  std::string detail;  // why a case failed
};

/// A named property check: `generate` draws the cases (JSON, so that every
/// case can be written out and replayed), `check` decides one case.
struct Suite {
  std::string name;
  std::string description;
  std::function<std::vector<Json>(Rng& rng, int size)> generate;
  std::function<CaseResult(const Json& c)> check;
};

/// Fresh instances of every suite, in report order. Checkers may keep
/// caches, so a suite object is not shared between threads.
std::vector<Suite> make_suites();
std::vector<std::string> suite_names();
/// Throws std::invalid_argument("unknown suite: ...").
Suite make_suite(const std::string& name);

/// Seed of the named substream of a run seed (splitmix64 of seed ^ FNV-1a(name)).
std::uint64_t substream_seed(std::uint64_t seed, const std::string& name);

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::string suite;
  int size = 1;  // case-count multiplier for random suites
};

struct Failure {
  std::size_t index = 0;
  std::string detail;
  Json case_data;
};

struct SuiteOutcome {
  std::string name;
  std::size_t cases = 0;
  std::vector<Failure> failures;  // all failing cases, in case order
  bool passed() const { return failures.empty(); }
};

SuiteOutcome run_suite(const SuiteConfig& config);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int size = 1;
  unsigned jobs = 1;
  std::vector<std::string> suites;    // empty: all
  std::optional<std::string> dump_dir;  // where counterexample files go
};

struct VerifyRun {
  Json report;
  bool passed = true;
};

/// Runs the suites (concurrently up to `jobs`), writes counterexample files
/// and assembles a deterministic report: no timings, suites in registry order.
VerifyRun run_verify(const VerifyOptions& options);

/// A replayable counterexample file.
Json counterexample_json(const std::string& suite, std::uint64_t seed, std::size_t index, const Json& case_data,
                         const std::string& detail);
/// Re-runs the case stored in a counterexample file.
CaseResult replay(const Json& counterexample);

}  // namespace qp::verify
