#include "fidl/dot.hpp"

#include <sstream>

namespace fidl {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_order(std::ostream& os, const Poset& p, const std::string& prefix, const std::string& indent) {
  for (Element x = 0; x < p.size(); ++x)
    os << indent << prefix << x << " [label=" << quoted(p.label(x)) << "];\n";
  for (auto [lo, hi] : p.covers()) os << indent << prefix << lo << " -> " << prefix << hi << ";\n";
}

void emit_cluster(std::ostream& os, const Poset& p, const std::string& name, const std::string& prefix) {
  os << "  subgraph cluster_" << name << " {\n    label=" << quoted(name) << ";\n";
  emit_order(os, p, prefix, "    ");
  os << "  }\n";
}

void emit_triples(std::ostream& os, const TernaryRelation& rel, const std::string& name,
                  const std::string (&prefixes)[3]) {
  std::size_t k = 0;
  for (const Triple& t : rel.triples()) {
    const std::string node = name + std::to_string(k++);
    os << "  " << node << " [shape=box, style=rounded, label=" << quoted(name == "r" ? "R" : "T") << "];\n";
    os << "  " << prefixes[0] << t[0] << " -> " << node << " [label=\"1\", style=dashed];\n";
    os << "  " << prefixes[1] << t[1] << " -> " << node << " [label=\"2\", style=dashed];\n";
    os << "  " << node << " -> " << prefixes[2] << t[2] << " [label=\"3\", style=dashed];\n";
  }
}

}  // namespace

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n";
  emit_order(os, p, "n", "  ");
  os << "}\n";
  return os.str();
}

std::string lattice_to_dot(const FiniteLattice& l) { return poset_to_dot(l.order()); }

std::string module_to_dot(const FidlModule& m) {
  std::ostringstream os;
  os << "digraph module {\n  rankdir=BT;\n  node [shape=circle];\n  edge [arrowhead=none];\n";
  emit_cluster(os, m.a().order(), "A", "a");
  emit_cluster(os, m.b().order(), "B", "b");
  os << "}\n";
  return os.str();
}

std::string frame_to_dot(const FiFrame& f) {
  std::ostringstream os;
  os << "digraph frame {\n  rankdir=BT;\n  node [shape=circle];\n";
  os << "  subgraph cluster_X {\n    label=\"X\";\n    edge [arrowhead=none];\n";
  emit_order(os, f.x, "x", "    ");
  os << "  }\n  subgraph cluster_Y {\n    label=\"Y\";\n    edge [arrowhead=none];\n";
  emit_order(os, f.y, "y", "    ");
  os << "  }\n";
  emit_triples(os, f.r, "r", {"x", "y", "x"});
  emit_triples(os, f.t, "t", {"y", "x", "x"});
  os << "}\n";
  return os.str();
}

}  // namespace fidl
