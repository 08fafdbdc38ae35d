#pragma once

#include <map>
#include <string>
#include <vector>

#include "fidl/congruence.hpp"

namespace fidl {

struct PropertyTally {
  std::size_t pass{0};
  std::size_t fail{0};
  std::size_t skipped{0};
};

struct SuiteFailure {
  std::string document;
  std::string property;
  nlohmann::json witness;
};

/// Per-property counts over a corpus. Discrepancy records are informational;
/// only `failures` are hard.
struct SuiteReport {
  std::map<std::string, PropertyTally> properties;
  std::vector<SuiteFailure> failures;
  nlohmann::json discrepancies = nlohmann::json::array();

  bool pass() const { return failures.empty(); }
  void record(const std::string& document, const std::string& property, bool ok,
              nlohmann::json witness = nullptr);
  void skip(const std::string& property) { ++properties[property].skipped; }
};

/// Size limits for the exponential properties; larger modules are skipped.
struct SuiteLimits {
  std::size_t prime_a = 6, prime_b = 4;
  std::size_t congruence_a = 6, congruence_b = 4;
};

/// Property names: axioms, monotonicity, filter_extension, prime_extension,
/// membership, representation, anti_isomorphism, classification.
void check_module(SuiteReport& report, const std::string& name, const FidlModule& m,
                  const SuiteLimits& limits = {});

/// Verdict read off a congruence list: trivial, simple, SI or not SI.
Verdict verdict_of(const FidlModule& m, const std::vector<FidlCongruence>& con);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace fidl
