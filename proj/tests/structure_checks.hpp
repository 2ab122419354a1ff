#pragma once

#include <optional>
#include <string>
#include <vector>

#include "junctions/junction_index.hpp"
#include "junctions/oracle.hpp"

// Executable forms of the structural facts behind the junction index, all
// judged against the flow oracle.
namespace junctions::test {

// oracle::is_junction for every ordered triple, computed once.
class OracleTable {
 public:
  explicit OracleTable(const Digraph& g) : n_(g.vertex_count()), table_(n_ * n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
      for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
          const char j = oracle::is_junction(g, s, u, v) ? 1 : 0;
          table_[index(s, u, v)] = j;
          table_[index(s, v, u)] = j;
        }
      }
    }
  }

  bool operator()(Vertex s, Vertex u, Vertex v) const { return table_[index(s, u, v)] != 0; }

 private:
  std::size_t index(Vertex s, Vertex u, Vertex v) const { return (s * n_ + u) * n_ + v; }

  std::size_t n_;
  std::vector<char> table_;
};

// z a proper tree ancestor of u inside one root-child subtree:
// s in J(z, u) iff s in J(z, t) for some in-neighbour t of u.
inline std::optional<std::string> check_parent_inheritance(const Digraph& g, const JunctionIndex& idx,
                                               const OracleTable& oracle) {
  const Arborescence& arb = idx.tree();
  const Vertex s = arb.root;
  for (Vertex u : arb.vertex_of_post) {
    if (u == s) continue;
    for (Vertex z = arb.parent[u]; z != s; z = arb.parent[z]) {
      bool via_parent = false;
      for (Vertex t : g.in(u)) via_parent = via_parent || oracle(s, z, t);
      if (idx.is_junction(z, u) != via_parent || oracle(s, z, u) != via_parent) {
        return "parent inheritance fails at s=" + g.label(s) + " z=" + g.label(z) + " u=" + g.label(u);
      }
    }
  }
  return std::nullopt;
}

// Tree path z = w0, ..., w: if s is in no J(z, wi) for i >= 1, then s is in
// no J(wi, wj) for i, j >= 1.
inline std::optional<std::string> check_chain_closure(const Digraph& g, const JunctionIndex& idx,
                                               const OracleTable& oracle) {
  const Arborescence& arb = idx.tree();
  const Vertex s = arb.root;
  for (Vertex w : arb.vertex_of_post) {
    if (w == s) continue;
    for (Vertex z = arb.parent[w]; z != s; z = arb.parent[z]) {
      std::vector<Vertex> below_z;  // w_1 .. w_{k-1}
      for (Vertex x = w; x != z; x = arb.parent[x]) below_z.push_back(x);
      bool premise = true;
      for (Vertex x : below_z) premise = premise && !oracle(s, z, x);
      if (!premise) continue;
      for (Vertex a : below_z) {
        for (Vertex b : below_z) {
          if (oracle(s, a, b) || idx.is_junction(a, b)) {
            return "chain closure fails at s=" + g.label(s) + " z=" + g.label(z) + " pair " +
                   g.label(a) + "," + g.label(b);
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Observer asserting, at every scan-loop condition, that for all u, v of the
// branch already scanned (post above the next vertex) s in J(u, v) iff
// their raw pointers differ. Records the first failure in `failure`.
inline ScanObserver pointer_agreement_observer(const Digraph& g, Vertex s, const OracleTable& oracle,
                                            std::optional<std::string>& failure) {
  return [&g, s, &oracle, &failure](const ScanState& st) {
    if (failure) return;
    const Arborescence& arb = st.tree;
    const std::int32_t floor = arb.post_of(st.w) + 1;
    const std::int32_t lo = std::max(floor, arb.minpost[st.branch_root]);
    for (std::int32_t pu = lo; pu <= arb.post[st.branch_root]; ++pu) {
      for (std::int32_t pv = pu + 1; pv <= arb.post[st.branch_root]; ++pv) {
        const Vertex u = arb.vertex_of_post[static_cast<std::size_t>(pu)];
        const Vertex v = arb.vertex_of_post[static_cast<std::size_t>(pv)];
        if (oracle(s, u, v) != (st.p[u] != st.p[v])) {
          failure = "pointer/junction disagreement at s=" + g.label(s) + " z=" +
                    g.label(st.z) + " pair " + g.label(u) + "," + g.label(v);
          return;
        }
      }
    }
  };
}

}  // namespace junctions::test
