#pragma once

#include <cstddef>
#include <vector>

#include "junctions/digraph.hpp"

// Ground truth for junction and LCA queries, independent of the index.
//
// A vertex s is a junction of u != v when there are directed paths s -> u
// and s -> v sharing only s. With every vertex other than s split into a
// unit-capacity in/out pair and a sink fed by u_out and v_out, that holds
// exactly when the maximum flow from s is 2. Endpoints are unit-capacity as
// well, so neither u nor v can sit inside the other path.
namespace junctions::oracle {

// Max-flow value in the split network, always in {0, 1, 2}. Requires s, u, v
// pairwise distinct.
int max_flow(const Digraph& g, Vertex s, Vertex u, Vertex v);

// u == v is never a junction; s == u (or s == v) is a junction iff the other
// endpoint is a proper descendant of s.
bool is_junction(const Digraph& g, Vertex s, Vertex u, Vertex v);

std::vector<Vertex> junction_set(const Digraph& g, Vertex u, Vertex v);

// Junctions from which no other junction of the pair is reachable.
std::vector<Vertex> lca_set(const Digraph& g, Vertex u, Vertex v);

inline constexpr std::size_t kMaxEnumerationTree = 12;

// Enumerates every pair of directed paths s -> u, s -> v and reports whether
// some pair meets only at s. Exponential; throws std::length_error when s
// has more than kMaxEnumerationTree descendants (itself included).
bool enumerate_disjoint_path_pair(const Digraph& g, Vertex s, Vertex u, Vertex v);

}  // namespace junctions::oracle
