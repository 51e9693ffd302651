#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace latkit {

struct FailureRecord {
  std::string instance;
  std::string property;
  std::string witness;
};

struct DivergenceRecord {
  std::string instance;
  std::string rule;
  std::string detail;
};

// A checked-in list of the divergences the harness is allowed to classify as
// expected. Anything failing outside these rules is a hard failure.
struct DivergenceRule {
  std::string id;
  std::string description;
};

struct DivergenceManifest {
  std::vector<DivergenceRule> rules;
  static DivergenceManifest builtin();
  static DivergenceManifest load_file(const std::string& path);
  bool allows(const std::string& rule_id) const;
};

struct VerificationReport {
  std::string suite;
  int instances = 0;
  int passes = 0;  // includes instances recorded as expected divergences
  std::vector<FailureRecord> failures;
  std::vector<DivergenceRecord> expected_divergences;
  long runtime_ms = 0;  // excluded from both renders to keep them deterministic
};

struct HarnessOptions {
  int max_size = 6;
  uint64_t seed = 1729;
  DivergenceManifest manifest = DivergenceManifest::builtin();
};

// Suites: the two-sided criterion/scan agreement for semidistributivity, the
// doubling construction's guarantees, interval gluing with congruence
// transfer, and the exhaustive small-lattice census.
VerificationReport run_sd_equivalence(const HarnessOptions& opts);
VerificationReport run_doubling(const HarnessOptions& opts);
VerificationReport run_glue(const HarnessOptions& opts);
VerificationReport run_census(const HarnessOptions& opts);

// name ∈ {"sd-equivalence", "doubling", "glue", "census", "all"}.
std::vector<VerificationReport> run_suite(const std::string& name, const HarnessOptions& opts);

bool suite_ok(const VerificationReport& report);

std::string render_text(const VerificationReport& report);
std::string render_machine(const VerificationReport& report);  // one JSON line

}  // namespace latkit
