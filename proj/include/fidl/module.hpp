#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fidl/order.hpp"

namespace fidl {

/// One failed axiom with the first witness found for it.
struct AxiomViolation {
  std::string axiom;  // "F1".."F4", "I1".."I3"
  nlohmann::json witness;
};

/// Two-sorted structure <A, B, f, i> with fusion f : A x B -> A and
/// implication i : B x A -> A. Instances are validated on construction.
class FidlModule {
public:
  FidlModule() = default;

  /// Throws ShapeMismatch for bad table dimensions and AxiomViolation listing
  /// every violated axiom otherwise.
  static FidlModule validate(FiniteLattice a, FiniteLattice b, std::vector<Element> fusion,
                             std::vector<Element> implication);

  /// Evaluates F1-F4 and I1-I3; empty result means the tables form a module.
  /// Tables must already have the right shape.
  static std::vector<AxiomViolation> check_axioms(const FiniteLattice& a, const FiniteLattice& b,
                                                  const std::vector<Element>& fusion,
                                                  const std::vector<Element>& implication);

  const FiniteLattice& a() const { return a_; }
  const FiniteLattice& b() const { return b_; }

  /// f(x, b), row-indexed by A.
  Element f(Element x, Element b) const { return f_[x * b_.size() + b]; }
  /// i(b, x), row-indexed by B.
  Element i(Element b, Element x) const { return i_[b * a_.size() + x]; }

  const std::vector<Element>& fusion_table() const { return f_; }
  const std::vector<Element>& implication_table() const { return i_; }

  bool is_trivial() const { return a_.is_trivial() && b_.is_trivial(); }

  friend bool operator==(const FidlModule& m, const FidlModule& n) {
    return m.a_ == n.a_ && m.b_ == n.b_ && m.f_ == n.f_ && m.i_ == n.i_;
  }

private:
  FiniteLattice a_;
  FiniteLattice b_;
  std::vector<Element> f_;
  std::vector<Element> i_;
};

/// x -> f(x, b) and x -> i(b, x).
std::vector<Element> section_f(const FidlModule& m, Element b);
std::vector<Element> section_i(const FidlModule& m, Element b);

enum class ExtensionMode { fusion, implication };

/// Fusion: f(G, H) = {x : exists (g, h) in G x H with f(g, h) <= x}.
/// Implication: i(H, G) = {x : exists (h, g) in H x G with g <= i(h, x)}.
/// `g` is a filter of A and `h` a filter of B; the result is a filter of A.
Subset filter_extension(const FidlModule& m, ExtensionMode mode, const Subset& g, const Subset& h);

/// Prime pair (Q in X(A), R in X(B)) as spectrum indices.
struct PrimePair {
  Element q;
  Element r;
  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

/// Searches the spectra in canonical order for primes Q >= G and R >= H with
/// f(Q, R) <= P (fusion) or i(R, Q) <= P (implication). Throws
/// PreconditionFailed when the corresponding containment fails for (G, H).
std::optional<PrimePair> extend_to_primes(const FidlModule& m, ExtensionMode mode, const Subset& g,
                                          const Subset& h, const Subset& p,
                                          const Spectrum& spec_a, const Spectrum& spec_b);
std::optional<PrimePair> extend_to_primes(const FidlModule& m, ExtensionMode mode, const Subset& g,
                                          const Subset& h, const Subset& p);

/// Failure of x <= y, b <= c  =>  f(x,b) <= f(y,c) and i(c,x) <= i(b,y).
std::optional<nlohmann::json> monotonicity_failure(const FidlModule& m);

/// Binary operations on A read from a module whose two sorts coincide.
struct FusionImplicationAlgebra {
  std::vector<Element> fusion;       // x o y = f(x, y)
  std::vector<Element> implication;  // x -> y = i(x, y)
  std::vector<std::string> failed_identities;  // names "1".."6"; expected empty
  bool residuated{false};
  std::optional<nlohmann::json> residuation_counterexample;
};

/// Throws SortMismatch unless B is the same lattice as A.
FusionImplicationAlgebra as_fusion_implication_algebra(const FidlModule& m);

struct ModalLattice {
  std::vector<Element> diamond;  // x -> f(x, 1)
  std::vector<Element> box;      // x -> i(1, x)
  std::vector<std::string> failed_laws;  // expected empty
};

/// Throws SortMismatch unless |B| = 2.
ModalLattice as_modal_lattice(const FidlModule& m);

/// A = H^X with pointwise order, B = H, f_a(g)(x) = a /\ g(x) and
/// i_a(g)(x) = a -> g(x). Throws EmptyBase for an empty index set and
/// BudgetExceeded when |H|^|X| exceeds the lattice budget.
FidlModule heyting_power_module(const FiniteLattice& h, std::size_t exponent);

}  // namespace fidl
