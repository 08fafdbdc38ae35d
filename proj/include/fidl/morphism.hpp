#pragma once

#include <optional>
#include <vector>

#include "fidl/module.hpp"

namespace fidl {

/// Pair (alpha, gamma) : M -> N of bounded lattice maps commuting with f and i.
struct FidlHomomorphism {
  FidlModule source;
  FidlModule target;
  std::vector<Element> alpha;  // A -> target A
  std::vector<Element> gamma;  // B -> target B
};

/// First failure among: map shape, alpha and gamma as bounded lattice maps,
/// fusion square, implication square. Nothing for a homomorphism.
std::optional<Error> hom_failure(const FidlModule& src, const FidlModule& tgt,
                                 const std::vector<Element>& alpha, const std::vector<Element>& gamma);

/// Throws ShapeMismatch, NotLatticeHom or SquareViolation.
FidlHomomorphism validate_hom(FidlModule src, FidlModule tgt, std::vector<Element> alpha,
                              std::vector<Element> gamma);

FidlHomomorphism identity_hom(const FidlModule& m);

/// `second` after `first`; throws TargetMismatch if they do not compose.
FidlHomomorphism compose(const FidlHomomorphism& second, const FidlHomomorphism& first);

/// Inverse of a bijective map, or nothing with the first collision/miss.
std::optional<std::vector<Element>> invert_map(const std::vector<Element>& map, std::size_t target_size);

struct IsoReport {
  bool iso{false};
  std::optional<FidlHomomorphism> inverse;  // validated when present
};

/// Bijectivity of both components; the inverse pair is built and validated.
IsoReport is_iso(const FidlHomomorphism& hom);

bool is_injective(const std::vector<Element>& map);
bool is_surjective(const std::vector<Element>& map, std::size_t target_size);

}  // namespace fidl
