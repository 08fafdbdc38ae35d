#pragma once

#include <vector>

#include "fidl/morphism.hpp"

namespace fidl {

/// One-element module (A = B = 1).
FidlModule trivial_module();

/// N = <A, C, f(x, h(c)), i(h(c), x)> together with (id_A, h) : N -> M.
/// Throws NotAHomomorphism when h is not a bounded lattice homomorphism.
FidlHomomorphism restriction_module(const FidlModule& m, const FiniteLattice& c, const std::vector<Element>& h);

struct ProductModule {
  FidlModule module;
  ProductLattice a;
  ProductLattice b;
  std::vector<FidlHomomorphism> projections;
};

/// Componentwise product with pointwise f and i. Throws EmptyBase for an empty
/// list and BudgetExceeded when either sort exceeds the lattice budget.
ProductModule product_module(const std::vector<FidlModule>& members);

/// The unique map into the product induced by a cone of homomorphisms
/// (one per factor, all with the same source).
FidlHomomorphism pairing(const ProductModule& product, const std::vector<FidlHomomorphism>& cone);

/// Verdict for a claimed subdirect embedding M -> prod(factors): both
/// components injective and every projection composite onto.
struct SubdirectReport {
  bool injective{false};
  std::vector<bool> onto;  // per factor
  bool subdirect{false};
};

/// Throws TargetMismatch if hom's target differs from product_module(factors).
SubdirectReport check_subdirect_embedding(const FidlModule& m, const std::vector<FidlModule>& factors,
                                          const FidlHomomorphism& hom);

}  // namespace fidl
