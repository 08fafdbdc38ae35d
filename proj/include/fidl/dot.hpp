#pragma once

#include <string>

#include "fidl/frame.hpp"

namespace fidl {

/// Hasse diagram with covering edges drawn bottom to top.
std::string lattice_to_dot(const FiniteLattice& l);
std::string poset_to_dot(const Poset& p);

/// One cluster per sort.
std::string module_to_dot(const FidlModule& m);

/// Each triple becomes an intermediate node with arcs labelled 1, 2 and 3.
std::string frame_to_dot(const FiFrame& f);

}  // namespace fidl
