#include <sstream>

#include "newcomb/tlg.hpp"

namespace newcomb::tlg {

namespace {

std::string_view fill_color(EventKind kind) {
  switch (kind) {
    case EventKind::kCChoice:
      return "#f4a6a6";
    case EventKind::kOutcome:
      return "#a6c8f4";
    case EventKind::kElaboration:
      return "#e0e0e0";
    default:
      return "white";
  }
}

std::string_view entanglement_color(EventKind kind) {
  switch (kind) {
    case EventKind::kCChoice:
      return "red";
    case EventKind::kOutcome:
      return "blue";
    default:
      return "purple";
  }
}

}  // namespace

std::string to_dot(const TLGraph& tlg) {
  std::ostringstream out;
  out << "digraph tlg {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle, style=filled];\n";
  for (const auto& n : tlg.nodes()) {
    out << "  " << n.id << " [label=\"" << n.id << "\\n" << to_string(n.kind)
        << "\", fillcolor=\"" << fill_color(n.kind) << "\"];\n";
  }
  for (const auto& e : tlg.edges()) {
    const bool branch = tlg.edge_role(e) == EdgeRole::kBranch;
    out << "  " << e.first << " -> " << e.second
        << " [style=" << (branch ? "dashed" : "solid") << "];\n";
  }
  // One undirected edge per consecutive pair inside each class.
  for (const auto& group : tlg.entangled_groups()) {
    const auto color = entanglement_color(tlg.node(group.front()).kind);
    for (std::size_t i = 1; i < group.size(); ++i) {
      out << "  " << group[i - 1] << " -> " << group[i]
          << " [dir=none, style=dotted, constraint=false, color=" << color
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace newcomb::tlg
