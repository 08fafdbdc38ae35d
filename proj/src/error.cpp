#include "fidl/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace fidl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed: return "Malformed";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::kind_mismatch: return "KindMismatch";
    case ErrorCode::not_a_poset: return "NotAPoset";
    case ErrorCode::no_meet_or_join: return "NoMeetOrJoin";
    case ErrorCode::not_distributive: return "NotDistributive";
    case ErrorCode::not_bounded: return "NotBounded";
    case ErrorCode::axiom_violation: return "AxiomViolation";
    case ErrorCode::closure_violation: return "ClosureViolation";
    case ErrorCode::condition_violation: return "ConditionViolation";
    case ErrorCode::not_lattice_hom: return "NotLatticeHom";
    case ErrorCode::not_a_homomorphism: return "NotAHomomorphism";
    case ErrorCode::square_violation: return "SquareViolation";
    case ErrorCode::carrier_not_sublattice: return "CarrierNotSublattice";
    case ErrorCode::target_mismatch: return "TargetMismatch";
    case ErrorCode::not_strongly_closed: return "NotStronglyClosed";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::sort_mismatch: return "SortMismatch";
    case ErrorCode::empty_base: return "EmptyBase";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed:
    case ErrorCode::shape_mismatch:
    case ErrorCode::kind_mismatch:
      return ErrorClass::malformed;
    case ErrorCode::budget_exceeded:
      return ErrorClass::budget;
    default:
      return ErrorClass::property;
  }
}

nlohmann::json Error::to_json() const {
  return {{"error", std::string(to_string(code_))}, {"message", what()}, {"witness", witness_}};
}

Budget Budget::current() {
  Budget b;
  const char* raw = std::getenv("FIDL_BUDGET_OVERRIDE");
  if (raw == nullptr) return b;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || ptr != raw + std::strlen(raw)) return b;
  b.lattice_max = std::max(b.lattice_max, value);
  b.partition_max_a = std::max(b.partition_max_a, value);
  b.partition_max_b = std::max(b.partition_max_b, value);
  b.closed_pair_max_points = std::max(b.closed_pair_max_points, value);
  return b;
}

void require_budget(bool within, std::string_view what, std::size_t size, std::size_t limit) {
  if (within) return;
  throw Error(ErrorCode::budget_exceeded,
              std::string(what) + ": size " + std::to_string(size) + " exceeds budget " +
                  std::to_string(limit),
              {{"what", std::string(what)}, {"size", size}, {"limit", limit}});
}

}  // namespace fidl
