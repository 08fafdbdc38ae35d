#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fidl/morphism.hpp"

namespace fidl {

using Triple = std::array<Element, 3>;

/// Subset of n1 x n2 x n3 stored as a flat bitset at (a * n2 + b) * n3 + c.
class TernaryRelation {
public:
  TernaryRelation() = default;
  TernaryRelation(std::size_t n1, std::size_t n2, std::size_t n3)
      : n1_{n1}, n2_{n2}, n3_{n3}, bits_(n1 * n2 * n3) {}

  std::size_t dim(std::size_t k) const { return k == 0 ? n1_ : k == 1 ? n2_ : n3_; }
  bool contains(Element a, Element b, Element c) const { return bits_.contains(index(a, b, c)); }
  void insert(Element a, Element b, Element c) { bits_.insert(index(a, b, c)); }
  void erase(Element a, Element b, Element c) { bits_.erase(index(a, b, c)); }
  std::size_t count() const { return bits_.count(); }

  /// {c : (a, b, c) in the relation}.
  Subset third(Element a, Element b) const;
  /// Triples in lexicographic order.
  std::vector<Triple> triples() const;

  friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;

private:
  std::size_t index(Element a, Element b, Element c) const { return (a * n2_ + b) * n3_ + c; }
  std::size_t n1_{0}, n2_{0}, n3_{0};
  Subset bits_;
};

/// Two posets with R in X x Y x X and T in Y x X x X. Values produced by
/// validate_frame satisfy the down-down-up closure conditions; urquhart_check
/// also accepts unvalidated structures.
struct FiFrame {
  Poset x;
  Poset y;
  TernaryRelation r;
  TernaryRelation t;

  friend bool operator==(const FiFrame&, const FiFrame&) = default;
};

/// Builds relations from index triples. Throws ShapeMismatch for bad indices.
FiFrame make_structure(Poset x, Poset y, const std::vector<Triple>& r, const std::vector<Triple>& t);

/// First closure failure as {"relation", "triple", "lowered"}.
std::optional<nlohmann::json> closure_failure(const FiFrame& f);

/// Throws ClosureViolation.
FiFrame validate_frame(FiFrame f);
FiFrame validate_frame(Poset x, Poset y, const std::vector<Triple>& r, const std::vector<Triple>& t);

/// {z : exists (x, y) in U x V with (x, y, z) in R}.
Subset complex_fusion(const FiFrame& f, const Subset& u, const Subset& v);
/// {y in X : for all x in V and z, (x, y, z) in T implies z in U}.
Subset complex_implication(const FiFrame& f, const Subset& v, const Subset& u);

struct ComplexModule {
  IncreasingSetLattice up_x;  // sort A
  IncreasingSetLattice up_y;  // sort B
  FidlModule module;
};

/// Module of increasing sets. Throws BudgetExceeded past the lattice budget and
/// ClosureViolation if an operation leaves the increasing sets.
ComplexModule complex_module(const FiFrame& f);

struct CanonicalFrame {
  Spectrum spec_a;
  Spectrum spec_b;
  FiFrame frame;
};

/// Spectra of both sorts with (Q,R,P) in R iff f(Q,R) <= P and (R,P,Q) in T
/// iff i(R,P) <= Q.
CanonicalFrame canonical_frame(const FidlModule& m);

/// Both sides of the two membership equivalences for (x, b, P).
struct MembershipReport {
  bool fusion_member{false};      // f(x,b) in P
  bool fusion_relational{false};  // exists (Q,R,P) in R with x in Q, b in R
  std::optional<PrimePair> fusion_witness;
  bool implication_member{false};      // i(b,x) in P
  bool implication_relational{false};  // all (R,P,Q) in T with b in R have x in Q
  std::optional<PrimePair> implication_counterexample;  // (Q, R) with b in R, x not in Q
  bool agrees() const {
    return fusion_member == fusion_relational && implication_member == implication_relational;
  }
};

MembershipReport membership_check(const FidlModule& m, const CanonicalFrame& c, Element x, Element b, Element p);

/// Pair of monotone maps g : X -> X', h : Y -> Y' with (M1), (M2), (N1), (N2).
struct FiMorphism {
  FiFrame source;
  FiFrame target;
  std::vector<Element> g;
  std::vector<Element> h;
};

/// First failure among shape, monotonicity, M1, M2, N1, N2.
std::optional<Error> fi_morphism_failure(const FiFrame& src, const FiFrame& tgt, const std::vector<Element>& g,
                                         const std::vector<Element>& h);

/// Throws ShapeMismatch or ConditionViolation(name, witness).
FiMorphism validate_fi_morphism(FiFrame src, FiFrame tgt, std::vector<Element> g, std::vector<Element> h);

FiMorphism identity_fi(const FiFrame& f);
FiMorphism compose(const FiMorphism& second, const FiMorphism& first);

/// Preimage maps between canonical frames, from the target's frame to the
/// source's frame.
FiMorphism dual_of_hom(const FidlHomomorphism& hom, const CanonicalFrame& src, const CanonicalFrame& tgt);
FiMorphism dual_of_hom(const FidlHomomorphism& hom);

/// Preimage maps between complex modules, from the target's module to the
/// source's module.
FidlHomomorphism dual_of_fi_morphism(const FiMorphism& m, const ComplexModule& src, const ComplexModule& tgt);
FidlHomomorphism dual_of_fi_morphism(const FiMorphism& m);

/// For (g, h) : F -> F_M, the pair a -> {x : a in g(x)}, b -> {y : b in h(y)}
/// as a homomorphism M -> M_F.
FidlHomomorphism transpose_to_hom(const FidlModule& m, const CanonicalFrame& c, const FiMorphism& into);

struct RepresentationReport {
  FidlHomomorphism beta;  // M -> M_{F_M}
  bool iso{false};
  std::optional<FidlHomomorphism> inverse;
};

/// Validates the beta pair and checks bijectivity with an explicit inverse.
RepresentationReport representation_iso(const FidlModule& m);

struct CounitReport {
  FiMorphism epsilon;  // F -> F_{M_F}
  bool iso{false};
  std::optional<FiMorphism> inverse;
};

/// Validates (eps_X, eps_Y); the inverse is built explicitly and validated.
CounitReport counit_iso(const FiFrame& f);

struct ConditionResult {
  std::string name;
  bool pass{false};
  nlohmann::json witness;
};

struct UrquhartReport {
  std::vector<ConditionResult> conditions;  // "1".."5"
  std::string reading;
  bool pass() const;
};

/// Finite instances of the five conditions, evaluated on the raw structure.
/// In (4) and (5) f and i are the filter extensions of the complex module.
UrquhartReport urquhart_check(const FiFrame& f);

}  // namespace fidl
