#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jconf/rng.hpp"

namespace jconf {

enum class CheckStatus { Pass, Fail, Skipped };
enum class VerifyLevel { Quick, Full };

const char* to_string(CheckStatus s);
const char* to_string(VerifyLevel l);
VerifyLevel level_from_string(const std::string& s);  // "quick" | "full"

// One verified statement. `claim` is a self-contained description of the
// identity being tested; `witness` carries the counterexample on failure or
// the reason on skip.
struct CheckRecord {
  std::string check_id;
  std::string claim;
  CheckStatus status = CheckStatus::Skipped;
  std::string witness;
  std::int64_t millis = 0;
};

struct VerificationReport {
  std::string model;
  std::uint64_t seed = kDefaultSeed;
  std::string tool_version;
  std::string level;
  bool overall = false;  // true iff no check failed
  std::vector<CheckRecord> checks;

  int counted(CheckStatus s) const;
};

inline constexpr const char* kToolVersion = "1.0.0";

// Runs the full check battery for one model. Expensive checks are gated by
// level and by the real dimension of the model; gated-out checks appear as
// Skipped records so the report shape is stable. Deterministic under seed.
VerificationReport run_verify(const std::string& model_id, VerifyLevel level,
                              std::uint64_t seed = kDefaultSeed);

// Catalog models eligible at a level (Quick keeps realified conformal
// dimension <= 40).
std::vector<std::string> verify_models(VerifyLevel level);

// Runs verify_models(level) on a worker pool (0 = hardware concurrency).
// Reports come back in catalog order regardless of scheduling.
std::vector<VerificationReport> run_verify_all(VerifyLevel level,
                                               std::uint64_t seed = kDefaultSeed,
                                               int workers = 0);

}  // namespace jconf
