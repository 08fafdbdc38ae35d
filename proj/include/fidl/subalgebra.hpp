#pragma once

#include <optional>

#include "fidl/frame.hpp"

namespace fidl {

struct SubalgebraCandidate {
  Subset carrier_a;
  Subset carrier_b;
};

/// Throws CarrierNotSublattice(side, witness) unless both carriers are bounded
/// sublattices.
void require_sublattices(const FidlModule& m, const SubalgebraCandidate& c);

struct SubalgebraVerdict {
  bool fusion_closed{false};       // S1 or relational condition (1)
  bool implication_closed{false};  // S2 or relational condition (2)
  nlohmann::json fusion_witness;
  nlohmann::json implication_witness;
  bool subalgebra() const { return fusion_closed && implication_closed; }
};

/// f(A', B') in A' and i(B', A') in A'.
SubalgebraVerdict validate_subalgebra_direct(const FidlModule& m, const SubalgebraCandidate& c);

/// The two prime-filter conditions over the canonical frame, quantified as
/// stated: (1) for (Q1,R1,P) in R with P^A' <= Q there are Q2, R2 with
/// Q1^A' <= Q2, R1^B' <= R2 and (Q2,R2,Q) in R; (2) for (R1,Q,Q1) in T with
/// P^A' <= Q there are Q2, R2 with Q2^A' <= Q1, R1^B' <= R2 and (R2,P,Q2) in T.
SubalgebraVerdict validate_subalgebra_relational(const FidlModule& m, const SubalgebraCandidate& c,
                                                 const CanonicalFrame& frame);
SubalgebraVerdict validate_subalgebra_relational(const FidlModule& m, const SubalgebraCandidate& c);

}  // namespace fidl
