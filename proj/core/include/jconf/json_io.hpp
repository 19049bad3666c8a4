#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jconf/conformal.hpp"
#include "jconf/jordan.hpp"
#include "jconf/theta.hpp"
#include "jconf/verify.hpp"

namespace jconf {

// Raised for malformed documents; the message names the offending field.
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

// --- algebra round trip --------------------------------------------------
// Bare algebra object with fields exactly
//   name, field, n, r, d, delta, euclidean, basis, unit, theta, product
// (scalars in their string form, the product table sparse). Serialization is
// canonical: parse followed by serialize reproduces the input byte for byte.
std::string algebra_to_json(const JordanAlgebra& V);
JordanAlgebra algebra_from_json(const std::string& text);

// --- documents -----------------------------------------------------------
// Every document carries a top-level "schema_version": 1. doc_algebra wraps
// the bare algebra object under the "algebra" key; algebra_from_json accepts
// either form.
std::string doc_algebra(const JordanAlgebra& V);
std::string doc_lie(const ConformalAlgebra& C);
std::string doc_peirce(const JordanAlgebra& V);
// Shared schema for the root-data and dual-pair reports.
std::string doc_rootdata(const ConformalAlgebra& C);
std::string doc_keylemma(const JordanAlgebra& V, int degree, int points,
                         std::uint64_t seed, bool& all_pass);
std::string doc_theta(const ModelConstants& mc, const GParam& p);
std::string doc_plancherel(const ModelConstants& mc, long max_k);
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs,
                            VerifyLevel level, std::uint64_t seed);

// Parses a GParam document like {"variant":"EuclideanHW","k":0}. Integer
// fields are JSON numbers; imaginary parts are rational strings (plain
// integers also accepted). Throws JsonError naming the bad field.
GParam gparam_from_json(const std::string& text);

}  // namespace jconf
