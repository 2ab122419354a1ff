#include "junctions/lca.hpp"

namespace junctions {

std::vector<Vertex> filter_lowest(const ReachabilityMatrix& reach,
                                  std::span<const Vertex> junctions) {
  std::vector<Vertex> lowest;
  for (Vertex si : junctions) {
    bool dominated = false;
    for (Vertex sj : junctions) {
      if (sj != si && reach.reaches(si, sj)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) lowest.push_back(si);
  }
  return lowest;
}

std::vector<LcaReport> lcas_of_pairs(const Digraph& g, std::span<const LabelPair> pairs,
                                     unsigned threads) {
  return lcas_of_pairs(g, reachability(g), pairs, threads);
}

std::vector<LcaReport> lcas_of_pairs(const Digraph& g, const ReachabilityMatrix& reach,
                                     std::span<const LabelPair> pairs, unsigned threads) {
  auto junction_reports = junctions_of_pairs(g, pairs, threads);
  std::vector<LcaReport> reports;
  reports.reserve(junction_reports.size());
  for (auto& jr : junction_reports) {
    LcaReport r;
    r.u = std::move(jr.u);
    r.v = std::move(jr.v);
    r.error = std::move(jr.error);
    r.junctions = std::move(jr.junctions);
    // Order is preserved, so lcas stay label-sorted.
    r.lcas = filter_lowest(reach, r.junctions);
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace junctions
