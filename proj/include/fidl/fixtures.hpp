#pragma once

#include <utility>
#include <vector>

#include "fidl/frame.hpp"

namespace fidl::fixtures {

/// Lattice from the strict order generated by `below` pairs (a < b).
FiniteLattice lattice_from_pairs(std::vector<std::string> labels,
                                 const std::vector<std::pair<Element, Element>>& below);

FiniteLattice chain2();  // 0 < 1
FiniteLattice chain3();  // 0 < m < 1
FiniteLattice bool4();   // 0, a, b, 1

/// Diamond with three atoms; not distributive, so only the order table is returned.
std::pair<std::vector<std::string>, std::vector<std::vector<bool>>> m3_table();

/// A = B = L, f = meet, i = relative pseudocomplement.
FidlModule heyting_module(const FiniteLattice& l);

FidlModule mod2();         // A = B = CHAIN2, f = meet, i = Boolean implication
FidlModule modal_bool4();  // A = BOOL4, B = CHAIN2, diamond = box = identity
FiFrame ptframe();         // one point on each side, full R and T

}  // namespace fidl::fixtures
