#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "junctions/arborescence.hpp"
#include "junctions/digraph.hpp"

namespace junctions {

struct JunctionStats {
  // In-neighbour inspections made while deciding whether a scanned vertex
  // starts a new set.
  std::size_t arcs_examined = 0;
  // Scan-loop condition evaluations seen by the invariant checker.
  std::size_t invariant_checks = 0;
};

// Snapshot handed to a ScanObserver each time the scan loop condition is
// evaluated. `p` holds raw pointers (no find applied).
struct ScanState {
  const Arborescence& tree;
  std::span<const Vertex> p;
  Vertex branch_root;          // child of the source whose subtree is being scanned
  Vertex z;                    // current set owner
  std::optional<Vertex> w;     // next vertex to scan; nullopt is the post -1 dummy
};

using ScanObserver = std::function<void(const ScanState&)>;

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct JunctionBuildOptions {
  // Check, at every scan-loop condition, that z is a representative, that
  // every already-scanned vertex of the branch points at a representative
  // which is its tree ancestor, and that no vertex of the branch outside T_z
  // shares z's pointer. Throws InvariantViolation. Costs O(|T_s|) per check.
  bool verify_invariants = false;
  ScanObserver observer;
};

// Initial pointer array for source arb.root: p[v] is v's tree parent, except
// the root and its children, which point at themselves. Vertices outside the
// tree get kNoVertex.
std::vector<Vertex> init_representatives(const Arborescence& arb);

// Follows p to the representative, compressing the path.
Vertex find_representative(std::vector<Vertex>& p, Vertex v);

// Scans T_z below z in decreasing post order, splitting off a new set at
// every vertex that has an in-neighbour in a different set from z.
// Recursion on new set owners is driven by an explicit stack.
void single_junction_all_pairs(const Digraph& g, const Arborescence& arb,
                               std::vector<Vertex>& p, Vertex z,
                               JunctionStats& stats,
                               const JunctionBuildOptions& options = {});

// Constant-time "is the source a junction of (u, v)?" for one source.
class JunctionIndex {
 public:
  JunctionIndex(Arborescence tree, std::vector<Vertex> p, JunctionStats stats)
      : tree_(std::move(tree)), p_(std::move(p)), stats_(stats) {}

  Vertex source() const { return tree_.root; }
  const Arborescence& tree() const { return tree_; }
  const JunctionStats& stats() const { return stats_; }

  // Final pointers: every tree vertex points straight at its representative.
  std::span<const Vertex> representatives() const { return p_; }
  Vertex representative(Vertex v) const { return p_[v]; }

  bool is_junction(Vertex u, Vertex v) const {
    const Vertex s = tree_.root;
    if (u == v) return false;
    if (u == s) return tree_.contains(v);
    if (v == s) return tree_.contains(u);
    if (!tree_.contains(u) || !tree_.contains(v)) return false;
    return p_[u] != p_[v];
  }

  // Partition of T_s minus the source into representative classes. Classes
  // are ordered by the representative's post value, members by post value.
  std::vector<std::vector<Vertex>> classes() const;

  // Streams every unordered pair having the source as a junction: (s, v) for
  // each proper descendant v, then all pairs drawn from two different
  // classes. Runs in O(|T_s| + number of pairs).
  void for_each_pair(const std::function<void(Vertex, Vertex)>& emit) const;

  std::size_t pair_count() const;

 private:
  Arborescence tree_;
  std::vector<Vertex> p_;
  JunctionStats stats_;
};

JunctionIndex build_junction_index(const Digraph& g, Vertex s,
                                   const JunctionBuildOptions& options = {});

// Report for one query pair. When `error` is set the pair was not evaluated.
struct PairReport {
  std::string u;
  std::string v;
  std::optional<std::string> error;
  std::vector<Vertex> junctions;  // sorted by label
};

struct LabelPair {
  std::string u;
  std::string v;
};

// Builds one index per source and tests every pair against it. `threads`
// spreads sources over worker threads; results do not depend on it.
std::vector<PairReport> junctions_of_pairs(const Digraph& g, std::span<const LabelPair> pairs,
                                           unsigned threads = 1);

// Sorts vertices by label, byte-wise.
void sort_by_label(const Digraph& g, std::vector<Vertex>& vertices);

}  // namespace junctions
