#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace fidl {

enum class ErrorCode {
  // malformed input
  malformed,
  shape_mismatch,
  kind_mismatch,
  // violated mathematical properties
  not_a_poset,
  no_meet_or_join,
  not_distributive,
  not_bounded,
  axiom_violation,
  closure_violation,
  condition_violation,
  not_lattice_hom,
  not_a_homomorphism,
  square_violation,
  carrier_not_sublattice,
  target_mismatch,
  not_strongly_closed,
  precondition_failed,
  sort_mismatch,
  empty_base,
  // resource guards
  budget_exceeded,
};

std::string_view to_string(ErrorCode code);

/// Broad class of an error, used for the CLI exit-code contract.
enum class ErrorClass { property = 1, malformed = 2, budget = 3 };

ErrorClass classify(ErrorCode code);

/// Every rejection carries a machine-readable witness so that a failure can be
/// replayed from the CLI output alone.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, nlohmann::json witness = nlohmann::json::object())
      : std::runtime_error(std::move(message)), code_{code}, witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

  nlohmann::json to_json() const;

private:
  ErrorCode code_;
  nlohmann::json witness_;
};

/// Size guards for the exhaustive algorithms. FIDL_BUDGET_OVERRIDE=N raises
/// every guard to at least N.
struct Budget {
  std::size_t lattice_max = 4096;        // product, power and complex-module carriers
  std::size_t partition_max_a = 6;       // partition congruence oracle, sort A
  std::size_t partition_max_b = 5;       // partition congruence oracle, sort B
  std::size_t closed_pair_max_points = 14;  // |X| + |Y| for closed-pair enumeration

  static Budget current();
};

void require_budget(bool within, std::string_view what, std::size_t size, std::size_t limit);

}  // namespace fidl
