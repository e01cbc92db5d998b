#ifndef SELFSIM_DOT_HPP
#define SELFSIM_DOT_HPP

// Graphviz renderings of portraits and orbital graphs.

#include <array>
#include <cstddef>
#include <string>

#include "orbital_scheme.hpp"
#include "presentation.hpp"
#include "wreath.hpp"

namespace selfsim {

namespace detail {

inline std::string dot_node_id(const Vertex &v) { return v.is_root() ? "root" : "v" + v.to_string(); }

inline void portrait_dot(const WreathPresentation &pres, const PortraitNode &node, std::string &out) {
  std::string label = cycle_notation(node.root_perm);
  if (node.is_leaf)
    label = pres.render(node.section);
  out += "  " + dot_node_id(node.vertex) + " [label=\"" + label + "\"];\n";
  for (const auto &child : node.children) {
    // Subtrees on which the element acts trivially are left out.
    if (child.section.empty())
      continue;
    out += "  " + dot_node_id(node.vertex) + " -> " + dot_node_id(child.vertex) + " [label=\"" +
           std::to_string(int(child.vertex.letters().back())) + "\"];\n";
    portrait_dot(pres, child, out);
  }
}

} // namespace detail

/// Interior nodes carry the root permutation of the section in cycle
/// notation, leaves the section word.
inline std::string portrait_to_dot(const WreathPresentation &pres, const PortraitNode &root) {
  std::string out = "digraph portrait {\n  node [shape=box];\n";
  detail::portrait_dot(pres, root, out);
  out += "}\n";
  return out;
}

/// One edge x -> y per ordered pair in a non-diagonal class, colored by class.
inline std::string orbital_graph_to_dot(const PairLabeler &labeler) {
  static constexpr std::array<const char *, 10> palette{"black",  "red",    "blue",  "darkgreen", "orange",
                                                        "purple", "brown",  "cyan",  "magenta",   "gray"};
  const int n = labeler.transversal().level;
  const int d = labeler.transversal().base.degree();
  std::string out = "digraph orbital_graph {\n";
  for (std::uint32_t x = 0; x < labeler.points(); ++x)
    out += "  " + detail::dot_node_id(Vertex::from_index(d, n, x)) + ";\n";
  for (std::uint32_t x = 0; x < labeler.points(); ++x)
    for (std::uint32_t y = 0; y < labeler.points(); ++y) {
      const auto cls = labeler.label(x, y);
      if (cls == 0)
        continue;
      out += "  " + detail::dot_node_id(Vertex::from_index(d, n, x)) + " -> " +
             detail::dot_node_id(Vertex::from_index(d, n, y)) + " [color=" + palette[cls % palette.size()] +
             ", label=\"" + std::to_string(cls) + "\"];\n";
    }
  out += "}\n";
  return out;
}

} // namespace selfsim

#endif // SELFSIM_DOT_HPP
