#include "fidl/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace fidl {

namespace {

[[noreturn]] void malformed(const std::string& what, json witness = json::object()) {
  throw Error(ErrorCode::malformed, what, std::move(witness));
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field \"") + key + "\"", {{"field", key}});
  return j.at(key);
}

std::vector<Element> index_list(const json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<Element> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) malformed(std::string(what) + " entries must be non-negative integers");
    const auto k = v.get<std::uint64_t>();
    if (k >= bound) throw Error(ErrorCode::shape_mismatch, std::string(what) + " entry out of range", {{"value", k}});
    out.push_back(static_cast<Element>(k));
  }
  return out;
}

std::pair<std::vector<std::string>, std::vector<std::vector<bool>>> order_fields(const json& j) {
  const json& el = field(j, "elements");
  const json& leq = field(j, "leq");
  if (!el.is_array() || !leq.is_array()) malformed("\"elements\" and \"leq\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : el) {
    if (!e.is_string()) malformed("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::vector<bool>> table;
  for (const auto& row : leq) {
    if (!row.is_array()) malformed("\"leq\" rows must be arrays");
    std::vector<bool> r;
    for (const auto& v : row) {
      if (!v.is_boolean()) malformed("\"leq\" entries must be booleans");
      r.push_back(v.get<bool>());
    }
    table.push_back(std::move(r));
  }
  return {std::move(labels), std::move(table)};
}

json order_json(const Poset& p) {
  json leq = json::array();
  for (const auto& row : p.table()) leq.push_back(row);
  return {{"elements", p.labels()}, {"leq", leq}};
}

std::vector<Triple> triple_list(const json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array of triples");
  std::vector<Triple> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) malformed(std::string(what) + " entries must be triples");
    Triple tr{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (!t[k].is_number_unsigned()) malformed(std::string(what) + " entries must be non-negative integers");
      tr[k] = t[k].get<Element>();
    }
    out.push_back(tr);
  }
  return out;
}

json triples_json(const TernaryRelation& r) {
  json out = json::array();
  for (const auto& t : r.triples()) out.push_back(t);
  return out;
}

DocumentKind detect_kind(const json& j) {
  if (!j.is_object()) malformed("document must be a JSON object");
  if (j.contains("elements") && j.contains("leq")) return DocumentKind::lattice;
  if (j.contains("A") && j.contains("B")) return DocumentKind::module;
  if (j.contains("X") && j.contains("Y")) return DocumentKind::frame;
  if (j.contains("alpha") && j.contains("gamma")) return DocumentKind::hom;
  if (j.contains("carrierA") && j.contains("carrierB")) return DocumentKind::subalgebra;
  if (j.contains("thetaA") && j.contains("thetaB")) return DocumentKind::congruence;
  malformed("cannot determine the document kind");
}

}  // namespace

json poset_to_json(const Poset& p) { return order_json(p); }

Poset poset_from_json(const json& j) {
  auto [labels, table] = order_fields(j);
  return Poset::from_table(std::move(labels), table);
}

json lattice_to_json(const FiniteLattice& l, bool derived) {
  json out = order_json(l.order());
  if (!derived) return out;
  const auto n = static_cast<Element>(l.size());
  json meet = json::array(), join = json::array();
  for (Element x = 0; x < n; ++x) {
    json mr = json::array(), jr = json::array();
    for (Element y = 0; y < n; ++y) {
      mr.push_back(l.meet(x, y));
      jr.push_back(l.join(x, y));
    }
    meet.push_back(std::move(mr));
    join.push_back(std::move(jr));
  }
  out["meet"] = std::move(meet);
  out["join"] = std::move(join);
  out["bottom"] = l.bottom();
  out["top"] = l.top();
  return out;
}

FiniteLattice lattice_from_json(const json& j) {
  auto [labels, table] = order_fields(j);
  return FiniteLattice::validate(std::move(labels), table);
}

json module_to_json(const FidlModule& m) {
  const auto na = static_cast<Element>(m.a().size()), nb = static_cast<Element>(m.b().size());
  json f = json::array(), i = json::array();
  for (Element x = 0; x < na; ++x) {
    json row = json::array();
    for (Element b = 0; b < nb; ++b) row.push_back(m.f(x, b));
    f.push_back(std::move(row));
  }
  for (Element b = 0; b < nb; ++b) {
    json row = json::array();
    for (Element x = 0; x < na; ++x) row.push_back(m.i(b, x));
    i.push_back(std::move(row));
  }
  return {{"A", lattice_to_json(m.a())}, {"B", lattice_to_json(m.b())}, {"f", f}, {"i", i}};
}

FidlModule module_from_json(const json& j) {
  FiniteLattice a = lattice_from_json(field(j, "A"));
  FiniteLattice b = lattice_from_json(field(j, "B"));
  const json& fj = field(j, "f");
  const json& ij = field(j, "i");
  if (!fj.is_array() || fj.size() != a.size())
    throw Error(ErrorCode::shape_mismatch, "f must have |A| rows", {{"table", "f"}, {"expected", a.size()}});
  if (!ij.is_array() || ij.size() != b.size())
    throw Error(ErrorCode::shape_mismatch, "i must have |B| rows", {{"table", "i"}, {"expected", b.size()}});
  std::vector<Element> f, i;
  for (const auto& row : fj) {
    auto r = index_list(row, a.size(), "f");
    if (r.size() != b.size())
      throw Error(ErrorCode::shape_mismatch, "f rows must have |B| entries", {{"table", "f"}, {"expected", b.size()}});
    f.insert(f.end(), r.begin(), r.end());
  }
  for (const auto& row : ij) {
    auto r = index_list(row, a.size(), "i");
    if (r.size() != a.size())
      throw Error(ErrorCode::shape_mismatch, "i rows must have |A| entries", {{"table", "i"}, {"expected", a.size()}});
    i.insert(i.end(), r.begin(), r.end());
  }
  return FidlModule::validate(std::move(a), std::move(b), std::move(f), std::move(i));
}

json frame_to_json(const FiFrame& f) {
  return {{"X", order_json(f.x)}, {"Y", order_json(f.y)}, {"R", triples_json(f.r)}, {"T", triples_json(f.t)}};
}

FiFrame structure_from_json(const json& j) {
  Poset x = poset_from_json(field(j, "X"));
  Poset y = poset_from_json(field(j, "Y"));
  return make_structure(std::move(x), std::move(y), triple_list(field(j, "R"), "R"), triple_list(field(j, "T"), "T"));
}

FiFrame frame_from_json(const json& j) { return validate_frame(structure_from_json(j)); }

json hom_maps_to_json(const std::vector<Element>& alpha, const std::vector<Element>& gamma) {
  return {{"alpha", alpha}, {"gamma", gamma}};
}

std::pair<std::vector<Element>, std::vector<Element>> hom_maps_from_json(const json& j) {
  constexpr auto any = std::numeric_limits<std::size_t>::max();
  return {index_list(field(j, "alpha"), any, "alpha"), index_list(field(j, "gamma"), any, "gamma")};
}

json candidate_to_json(const SubalgebraCandidate& c) {
  return {{"carrierA", c.carrier_a.elements()}, {"carrierB", c.carrier_b.elements()}};
}

SubalgebraCandidate candidate_from_json(const json& j, const FidlModule& m) {
  SubalgebraCandidate c{Subset(m.a().size()), Subset(m.b().size())};
  for (Element x : index_list(field(j, "carrierA"), m.a().size(), "carrierA")) c.carrier_a.insert(x);
  for (Element b : index_list(field(j, "carrierB"), m.b().size(), "carrierB")) c.carrier_b.insert(b);
  return c;
}

Partition partition_from_blocks(const json& blocks, std::size_t n) {
  if (!blocks.is_array()) malformed("congruence blocks must be an array");
  std::vector<Element> block_of(n, static_cast<Element>(n));
  Element id = 0;
  for (const auto& b : blocks) {
    for (Element x : index_list(b, n, "block")) {
      if (block_of[x] != n) malformed("element listed in two blocks", {{"element", x}});
      block_of[x] = id;
    }
    ++id;
  }
  for (Element x = 0; x < n; ++x)
    if (block_of[x] == n) malformed("element missing from the blocks", {{"element", x}});
  return Partition(std::move(block_of));
}

std::string_view to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::lattice: return "lattice";
    case DocumentKind::module: return "module";
    case DocumentKind::frame: return "frame";
    case DocumentKind::hom: return "hom";
    case DocumentKind::subalgebra: return "subalgebra";
    case DocumentKind::congruence: return "congruence";
  }
  return "unknown";
}

DocumentKind document_kind_from_string(const std::string& s) {
  for (auto k : {DocumentKind::lattice, DocumentKind::module, DocumentKind::frame, DocumentKind::hom,
                 DocumentKind::subalgebra, DocumentKind::congruence})
    if (to_string(k) == s) return k;
  malformed("unknown document kind \"" + s + "\"", {{"kind", s}});
}

InstanceDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  InstanceDocument d;
  if (j.is_object() && j.contains("kind") && j.contains("payload")) {
    if (!j["kind"].is_string()) malformed("\"kind\" must be a string");
    d.kind = document_kind_from_string(j["kind"].get<std::string>());
    d.payload = j["payload"];
    if (j.contains("meta")) d.meta = j["meta"];
    if (j.contains("context")) d.context = j["context"];
    return d;
  }
  d.kind = detect_kind(j);
  d.payload = std::move(j);
  return d;
}

InstanceDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path, {{"path", path}});
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

json document_to_json(const InstanceDocument& d) {
  json out = {{"kind", to_string(d.kind)}, {"meta", d.meta}, {"payload", d.payload}};
  if (!d.context.is_null()) out["context"] = d.context;
  return out;
}

json payload_of(const json& j, DocumentKind kind) {
  if (j.is_object() && j.contains("kind") && j.contains("payload")) {
    if (!j["kind"].is_string() || document_kind_from_string(j["kind"].get<std::string>()) != kind)
      throw Error(ErrorCode::kind_mismatch, "expected a " + std::string(to_string(kind)) + " document",
                  {{"expected", to_string(kind)}});
    return j["payload"];
  }
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fidl
