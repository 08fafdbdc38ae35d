#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fidl/subalgebra.hpp"

namespace fidl {

using nlohmann::json;

json poset_to_json(const Poset& p);
/// {"elements": [...], "leq": [[...]]}; throws Malformed or NotAPoset.
Poset poset_from_json(const json& j);

/// With `derived`, adds "meet", "join", "bottom" and "top".
json lattice_to_json(const FiniteLattice& l, bool derived = false);
FiniteLattice lattice_from_json(const json& j);

json module_to_json(const FidlModule& m);
FidlModule module_from_json(const json& j);

json frame_to_json(const FiFrame& f);
/// Parses without checking the closure conditions.
FiFrame structure_from_json(const json& j);
FiFrame frame_from_json(const json& j);

json hom_maps_to_json(const std::vector<Element>& alpha, const std::vector<Element>& gamma);
std::pair<std::vector<Element>, std::vector<Element>> hom_maps_from_json(const json& j);

json candidate_to_json(const SubalgebraCandidate& c);
SubalgebraCandidate candidate_from_json(const json& j, const FidlModule& m);

/// Block lists as produced by congruence_to_json.
Partition partition_from_blocks(const json& blocks, std::size_t n);

enum class DocumentKind { lattice, module, frame, hom, subalgebra, congruence };

std::string_view to_string(DocumentKind k);
DocumentKind document_kind_from_string(const std::string& s);

/// {kind, meta, payload[, context]}. Bare payloads are accepted and their kind
/// is detected from the keys present. Homomorphism, subalgebra and congruence
/// payloads refer to modules supplied in `context`.
struct InstanceDocument {
  DocumentKind kind{DocumentKind::module};
  json meta = json::object();
  json payload = json::object();
  json context;
};

/// Accepts either a bare payload or a full document of the given kind.
json payload_of(const json& j, DocumentKind kind);

InstanceDocument parse_document(const std::string& text);
InstanceDocument read_document(const std::string& path);
json document_to_json(const InstanceDocument& d);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace fidl
