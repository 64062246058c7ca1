#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rttkit/scalar.hpp"

namespace rttkit {

/// Everything a verification run depends on. The seed fixes every sampled
/// point, so equal configs give equal reports (timing fields aside).
struct RunConfig {
  std::vector<std::string> suites{"all"};
  std::vector<int> n{2, 3};
  std::vector<int> l{1, 2, 3};
  Scalar c = 1;
  std::uint64_t seed = 1;
  int bound = 40;

  int rtt_pairs = 20;
  int qdet_points = 10;
  int hat_points = 10;
  int gauss_points = 3;
  int gauss_max_l = 2;
  int theorem1_max_n2 = 3;   // a ∈ {1..cap} for N = 2
  int theorem1_max_set = 2;  // a_s ∈ {0..cap} for N = 3
  int scalar_max_n2 = 2;
  int scalar_max_set = 2;
  int held_out = 4;

  int jobs = 1;
  /// Empty, or one of mutation_keys().
  std::string mutate;
  bool timing = true;
};

/// Known suite names, in execution order.
const std::vector<std::string>& suite_names();
/// Mutation key -> targeted suite.
const std::vector<std::pair<std::string, std::string>>& mutation_keys();
std::string mutation_target(const std::string& key);

struct CaseResult {
  std::string key;
  std::string anchor;
  std::string params_json;  // compact JSON object
  bool passed = false;
  bool negative_control = false;
  /// Not applicable to the drawn data (e.g. a control on a vanishing vector).
  bool skipped = false;
  std::size_t checks = 0;
  std::string detail;
  double elapsed_ms = 0;
};

struct SuiteResult {
  std::string name;
  std::vector<CaseResult> cases;
  double elapsed_ms = 0;
  bool passed() const;
};

struct Report {
  RunConfig config;
  std::vector<SuiteResult> suites;
  double elapsed_ms = 0;

  bool passed() const;
  const SuiteResult* suite(const std::string& name) const;
  /// Versioned JSON document; timing fields are left out when
  /// `include_timing` is false.
  std::string to_json(bool include_timing = true) const;
};

inline constexpr int kReportVersion = 1;

/// Throws DomainError on unknown suite names or mutation keys.
void validate(const RunConfig& config);

Report run(const RunConfig& config);

}  // namespace rttkit
