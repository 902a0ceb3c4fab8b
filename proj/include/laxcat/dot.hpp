#pragma once

#include <string>

#include "laxcat/fincat.hpp"
#include "laxcat/laxepi.hpp"

// Graphviz emission.  Objects become nodes, non-identity morphisms become
// labeled edges; identity loops are suppressed.  Node order follows object
// ids, edge order follows morphism ids, so output is deterministic.

namespace laxcat {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string dot_category(const FinCat& C) {
  using detail::dot_quote;
  std::string out = "digraph " + dot_quote(C.name().empty() ? "category" : C.name()) + " {\n";
  out += "  rankdir=LR;\n";
  for (ObjId a = 0; a < C.num_objects(); ++a)
    out += "  " + dot_quote(C.object_name(a)) + ";\n";
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    if (C.is_identity(f)) continue;
    out += "  " + dot_quote(C.object_name(C.src(f))) + " -> " +
           dot_quote(C.object_name(C.dst(f))) + " [label=" + dot_quote(C.mor(f).name) + "];\n";
  }
  return out + "}\n";
}

/// The comma category of g over F, one fill color per connected component.
/// Nodes are the factorization triples, edges the connecting morphisms.
inline std::string dot_comma(const CommaOverMorphism& comma) {
  using detail::dot_quote;
  static constexpr const char* palette[] = {"lightblue",  "lightyellow", "lightpink",
                                            "lightgreen", "lavender",    "peachpuff",
                                            "honeydew",   "mistyrose"};
  constexpr int n_colors = static_cast<int>(sizeof(palette) / sizeof(palette[0]));
  const FinCat& A = comma.functor().source();
  const FinCat& B = comma.functor().target();

  std::string out =
      "digraph " + dot_quote(B.mor(comma.over()).name + " over " + comma.functor().name()) +
      " {\n";
  out += "  rankdir=LR;\n  node [style=filled];\n";
  for (int i = 0; i < comma.num_objects(); ++i) {
    const CommaTriple& t = comma.object(i);
    std::string label =
        "(" + B.mor(t.h).name + ", " + A.object_name(t.a) + ", " + B.mor(t.k).name + ")";
    out += "  " + dot_quote(label) + " [fillcolor=" +
           palette[comma.component_at(i).index % n_colors] + "];\n";
  }
  for (const auto& e : comma.edges()) {
    const CommaTriple& s = comma.object(e.from);
    const CommaTriple& t = comma.object(e.to);
    std::string from =
        "(" + B.mor(s.h).name + ", " + A.object_name(s.a) + ", " + B.mor(s.k).name + ")";
    std::string to =
        "(" + B.mor(t.h).name + ", " + A.object_name(t.a) + ", " + B.mor(t.k).name + ")";
    out += "  " + dot_quote(from) + " -> " + dot_quote(to) +
           " [label=" + dot_quote(A.mor(e.f).name) + "];\n";
  }
  return out + "}\n";
}

}  // namespace laxcat
