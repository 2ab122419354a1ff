#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "junctions/digraph.hpp"
#include "junctions/junction_index.hpp"

namespace junctions {

struct LcaReport {
  std::string u;
  std::string v;
  std::optional<std::string> error;
  std::vector<Vertex> junctions;  // sorted by label
  std::vector<Vertex> lcas;       // subset of junctions, sorted by label
};

// Keeps the junctions of a pair from which no other junction of the same
// pair is reachable.
std::vector<Vertex> filter_lowest(const ReachabilityMatrix& reach, std::span<const Vertex> junctions);

std::vector<LcaReport> lcas_of_pairs(const Digraph& g, std::span<const LabelPair> pairs,
                                     unsigned threads = 1);

std::vector<LcaReport> lcas_of_pairs(const Digraph& g, const ReachabilityMatrix& reach,
                                     std::span<const LabelPair> pairs, unsigned threads = 1);

}  // namespace junctions
