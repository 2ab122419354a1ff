#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "junctions/digraph.hpp"

namespace junctions {

// Depth-first arborescence T_s over the descendants of a source s.
//
// Post-order numbers are local to the tree: contiguous from 0, assigned at
// finish time, so the root always gets size() - 1. For every tree vertex u
// the posts of the subtree T_u are exactly [minpost[u], post[u]].
//
// Per-vertex arrays are indexed by graph vertex; vertices outside the tree
// have in_tree == 0, post == minpost == -1 and parent == kNoVertex. The
// arrays are public so test utilities can inspect and corrupt them.
struct Arborescence {
  Vertex root = kNoVertex;
  std::vector<char> in_tree;
  std::vector<Vertex> parent;  // root maps to itself
  std::vector<std::int32_t> post;
  std::vector<std::int32_t> minpost;
  std::vector<Vertex> vertex_of_post;
  // Child of the root whose subtree holds the vertex; kNoVertex for the root.
  std::vector<Vertex> branch;
  // Tree children in discovery order, CSR layout.
  std::vector<std::size_t> child_offsets;
  std::vector<Vertex> child_list;

  std::size_t size() const { return vertex_of_post.size(); }
  bool contains(Vertex v) const { return v < in_tree.size() && in_tree[v] != 0; }

  std::span<const Vertex> children(Vertex u) const {
    return {child_list.data() + child_offsets[u], child_list.data() + child_offsets[u + 1]};
  }

  // Vertex with the given post value, or nullopt (the dummy, post -1) when p
  // is outside [0, size()).
  std::optional<Vertex> vertex_of(std::int64_t p) const {
    if (p < 0 || p >= static_cast<std::int64_t>(size())) return std::nullopt;
    return vertex_of_post[static_cast<std::size_t>(p)];
  }

  std::int32_t post_of(std::optional<Vertex> v) const { return v ? post[*v] : -1; }

  // x in T_u, by the subtree interval. Both must be tree vertices.
  bool in_subtree(Vertex x, Vertex u) const {
    return minpost[u] <= post[x] && post[x] <= post[u];
  }

  std::size_t subtree_size(Vertex u) const {
    return static_cast<std::size_t>(post[u] - minpost[u] + 1);
  }
};

// DFS from s visiting out-neighbours in adjacency order, with an explicit
// stack.
Arborescence build_arborescence(const Digraph& g, Vertex s);

enum class ArcClass : std::uint8_t {
  Tree,
  ExternalDescendant,
  InternalDescendant,
  ExternalCrossing,
  InternalCrossing,
  OutsideArborescence,
};

inline constexpr std::size_t kArcClassCount = 6;

const char* to_string(ArcClass c);

// Indexed like g.arcs().
std::vector<ArcClass> classify_arcs(const Digraph& g, const Arborescence& arb);

std::array<std::size_t, kArcClassCount> count_arc_classes(std::span<const ArcClass> classes);

// Empty iff: every arc inside T_s descends in post order; no arc runs from a
// lower-post root child's subtree into a higher-post one (which rules out
// any such path); and sibling subtrees occupy ordered, disjoint post ranges.
std::vector<std::string> check_postorder_layout(const Digraph& g, const Arborescence& arb);

}  // namespace junctions
