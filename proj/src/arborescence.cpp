#include "junctions/arborescence.hpp"

#include <algorithm>
#include <utility>

namespace junctions {

Arborescence build_arborescence(const Digraph& g, Vertex s) {
  const std::size_t n = g.vertex_count();
  if (s >= n) throw std::out_of_range("build_arborescence: source is not a vertex");

  Arborescence arb;
  arb.root = s;
  arb.in_tree.assign(n, 0);
  arb.parent.assign(n, kNoVertex);
  arb.post.assign(n, -1);
  arb.minpost.assign(n, -1);
  arb.branch.assign(n, kNoVertex);

  std::vector<std::size_t> child_count(n, 0);
  std::vector<Vertex> discovery;
  // (vertex, next out-list position)
  std::vector<std::pair<Vertex, std::size_t>> stack;

  std::int32_t next_post = 0;
  arb.in_tree[s] = 1;
  arb.parent[s] = s;
  arb.minpost[s] = next_post;
  stack.emplace_back(s, 0);
  discovery.push_back(s);

  while (!stack.empty()) {
    auto& [u, pos] = stack.back();
    auto targets = g.out(u);
    if (pos < targets.size()) {
      Vertex v = targets[pos++];
      if (arb.in_tree[v]) continue;
      arb.in_tree[v] = 1;
      arb.parent[v] = u;
      arb.branch[v] = u == s ? v : arb.branch[u];
      // Every post in T_v is assigned after this point.
      arb.minpost[v] = next_post;
      ++child_count[u];
      discovery.push_back(v);
      stack.emplace_back(v, 0);
    } else {
      arb.post[u] = next_post++;
      arb.vertex_of_post.push_back(u);
      stack.pop_back();
    }
  }

  arb.child_offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    arb.child_offsets[v + 1] = arb.child_offsets[v] + child_count[v];
  }
  arb.child_list.resize(arb.child_offsets[n]);
  std::vector<std::size_t> fill(arb.child_offsets.begin(), arb.child_offsets.end() - 1);
  for (Vertex v : discovery) {
    if (v != s) arb.child_list[fill[arb.parent[v]]++] = v;
  }
  return arb;
}

const char* to_string(ArcClass c) {
  switch (c) {
    case ArcClass::Tree: return "tree";
    case ArcClass::ExternalDescendant: return "external-descendant";
    case ArcClass::InternalDescendant: return "internal-descendant";
    case ArcClass::ExternalCrossing: return "external-crossing";
    case ArcClass::InternalCrossing: return "internal-crossing";
    case ArcClass::OutsideArborescence: return "outside";
  }
  return "?";
}

std::vector<ArcClass> classify_arcs(const Digraph& g, const Arborescence& arb) {
  std::vector<ArcClass> classes;
  classes.reserve(g.arc_count());
  const Vertex s = arb.root;
  for (const Arc& a : g.arcs()) {
    const Vertex u = a.from, v = a.to;
    if (!arb.contains(u) || !arb.contains(v)) {
      classes.push_back(ArcClass::OutsideArborescence);
    } else if (v != s && arb.parent[v] == u) {
      classes.push_back(ArcClass::Tree);
    } else if (u == s) {
      classes.push_back(ArcClass::ExternalDescendant);
    } else if (arb.in_subtree(v, u)) {
      classes.push_back(ArcClass::InternalDescendant);
    } else if (arb.branch[u] != arb.branch[v]) {
      classes.push_back(ArcClass::ExternalCrossing);
    } else {
      classes.push_back(ArcClass::InternalCrossing);
    }
  }
  return classes;
}

std::array<std::size_t, kArcClassCount> count_arc_classes(std::span<const ArcClass> classes) {
  std::array<std::size_t, kArcClassCount> counts{};
  for (ArcClass c : classes) ++counts[static_cast<std::size_t>(c)];
  return counts;
}

std::vector<std::string> check_postorder_layout(const Digraph& g, const Arborescence& arb) {
  std::vector<std::string> violations;
  const Vertex s = arb.root;

  for (const Arc& a : g.arcs()) {
    if (!arb.contains(a.from) || !arb.contains(a.to)) continue;
    if (arb.post[a.from] <= arb.post[a.to]) {
      violations.push_back("arc " + g.label(a.from) + "->" + g.label(a.to) +
                           " does not descend in post order");
    }
    if (a.from == s || a.to == s) continue;
    const Vertex bu = arb.branch[a.from], bv = arb.branch[a.to];
    if (bu != bv && arb.post[bu] < arb.post[bv]) {
      violations.push_back("arc " + g.label(a.from) + "->" + g.label(a.to) +
                           " leads from subtree of " + g.label(bu) +
                           " into later subtree of " + g.label(bv));
    }
  }

  // Actual post range held by each root child's subtree.
  auto roots = arb.children(s);
  std::vector<std::pair<std::int32_t, std::int32_t>> range(g.vertex_count(), {INT32_MAX, INT32_MIN});
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (!arb.contains(x) || x == s) continue;
    auto& r = range[arb.branch[x]];
    r.first = std::min(r.first, arb.post[x]);
    r.second = std::max(r.second, arb.post[x]);
  }
  std::vector<Vertex> ordered(roots.begin(), roots.end());
  std::sort(ordered.begin(), ordered.end(),
            [&](Vertex a, Vertex b) { return arb.post[a] < arb.post[b]; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (range[ordered[i - 1]].second >= range[ordered[i]].first) {
      violations.push_back("subtrees of " + g.label(ordered[i - 1]) + " and " +
                           g.label(ordered[i]) + " have interleaved post values");
    }
  }
  return violations;
}

}  // namespace junctions
