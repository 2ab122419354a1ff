// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../structure_checks.hpp"
#include "../test_support.hpp"
#include "junctions/cli.hpp"
#include "junctions/junction_index.hpp"
#include "junctions/lca.hpp"
#include "junctions/oracle.hpp"
#include "junctions/testkit.hpp"

namespace {

using namespace junctions;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string triple(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  return "s=" + g.label(s) + " u=" + g.label(u) + " v=" + g.label(v);
}

const std::vector<test::NamedGraph>& suite() {
  static const auto graphs = test::small_suite(300);
  return graphs;
}

// 1. Index answer equals the flow oracle for every ordered triple.
Outcome oracle_equivalence() {
  constexpr double kTimeLimit = 60.0;
  const auto start = Clock::now();
  std::size_t triples = 0;
  for (const auto& [name, g] : suite()) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex s = 0; s < n; ++s) {
      auto idx = build_junction_index(g, s);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          ++triples;
          if (idx.is_junction(u, v) != oracle::is_junction(g, s, u, v)) {
            return {false, name + ": " + triple(g, s, u, v)};
          }
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << suite().size() << " graphs, " << triples << " triples, 0 mismatches, " << elapsed
    << " s (limit " << kTimeLimit << " s)";
  return {elapsed <= kTimeLimit, d.str()};
}

// 2. Flow oracle equals exhaustive path-pair enumeration on n <= 8.
Outcome oracle_of_oracle() {
  std::size_t graphs = 0, triples = 0;
  for (const auto& [name, g] : suite()) {
    if (g.vertex_count() > 8) continue;
    ++graphs;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          ++triples;
          if (oracle::enumerate_disjoint_path_pair(g, s, u, v) != oracle::is_junction(g, s, u, v)) {
            return {false, name + ": " + triple(g, s, u, v)};
          }
        }
      }
    }
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(triples) +
                    " triples, 0 mismatches"};
}

// 3. LCA reports equal the oracle LCA set and are antichains.
Outcome lca_equivalence() {
  std::size_t pairs_checked = 0;
  for (const auto& [name, g] : suite()) {
    if (g.vertex_count() > 10) continue;
    std::vector<LabelPair> pairs;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) pairs.push_back({g.label(u), g.label(v)});
    }
    auto reach = reachability(g);
    for (const auto& r : lcas_of_pairs(g, reach, pairs)) {
      ++pairs_checked;
      auto expected = oracle::lca_set(g, *g.find(r.u), *g.find(r.v));
      sort_by_label(g, expected);
      if (r.error || r.lcas != expected) {
        return {false, name + ": lcas of (" + r.u + "," + r.v + ")"};
      }
      for (Vertex x : r.lcas) {
        for (Vertex y : r.lcas) {
          if (x != y && reach.reaches(x, y)) {
            return {false, name + ": related LCAs for (" + r.u + "," + r.v + ")"};
          }
        }
      }
    }
  }
  return {true, std::to_string(pairs_checked) + " pairs, 0 mismatches, all antichains"};
}

// 4. On arborescences every distinct pair has exactly the tree LCA as its
// only junction and only LCA.
Outcome tree_specialization() {
  testkit::SplitMix64 sizes(2024);
  std::size_t pairs_checked = 0, max_n = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t n = 2 + sizes.below(199);
    max_n = std::max(max_n, n);
    Digraph g = testkit::gen_arborescence(n, 500 + i);
    std::vector<LabelPair> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({g.label(u), g.label(v)});
    }
    for (const auto& r : lcas_of_pairs(g, pairs)) {
      ++pairs_checked;
      const Vertex expected = test::naive_tree_lca(g, *g.find(r.u), *g.find(r.v));
      if (r.junctions != std::vector<Vertex>{expected} || r.lcas != std::vector<Vertex>{expected}) {
        return {false, "tree " + std::to_string(i) + " pair (" + r.u + "," + r.v + ")"};
      }
    }
  }
  return {true, "50 trees (n <= " + std::to_string(max_n) + "), " + std::to_string(pairs_checked) +
                    " pairs, 0 mismatches"};
}

// 5. arcs_examined <= m + n on every build; all-sources preprocessing of
// n=2000, m~20000 under 10 s.
Outcome complexity_bound() {
  constexpr double kTimeLimit = 10.0;
  auto prob_for = [](double n, double m) { return m / (n * (n - 1) / 2); };
  struct Case {
    std::string name;
    Digraph g;
  };
  std::vector<Case> cases;
  cases.push_back({"random-dag", testkit::gen_random_dag(5000, prob_for(5000, 50000), 11)});
  cases.push_back({"kinship", testkit::gen_kinship(5000, 12)});
  cases.push_back({"arborescence", testkit::gen_arborescence(5000, 13)});
  cases.push_back({"path", testkit::gen_path(5000)});
  cases.push_back({"star", testkit::gen_star(5000)});
  cases.push_back({"worst-case-fig1", testkit::gen_worst_case(220, 220)});

  std::ostringstream d;
  std::size_t builds = 0;
  for (const auto& [name, g] : cases) {
    const std::size_t bound = g.arc_count() + g.vertex_count();
    std::size_t worst = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      auto idx = build_junction_index(g, s);
      ++builds;
      worst = std::max(worst, idx.stats().arcs_examined);
      if (idx.stats().arcs_examined > bound) {
        return {false, name + ": arcs_examined " + std::to_string(idx.stats().arcs_examined) +
                           " > m+n " + std::to_string(bound)};
      }
    }
    d << name << "(n=" << g.vertex_count() << ",m=" << g.arc_count() << ",max=" << worst << ") ";
  }

  Digraph timed = testkit::gen_random_dag(2000, prob_for(2000, 20000), 21);
  const auto start = Clock::now();
  std::size_t sink = 0;
  for (Vertex s = 0; s < timed.vertex_count(); ++s) {
    sink += build_junction_index(timed, s).stats().arcs_examined;
  }
  const double elapsed = seconds_since(start);
  d << "| " << builds << " builds within bound; all-sources n=2000 m=" << timed.arc_count()
    << " in " << elapsed << " s (limit " << kTimeLimit << " s)";
  (void)sink;
  return {elapsed < kTimeLimit, d.str()};
}

// 6. Worst-case listing: 25 first-layer junctions for each of 300 pairs.
Outcome worst_case_listing() {
  Digraph g = testkit::gen_worst_case(25, 25);
  std::vector<LabelPair> pairs;
  for (int i = 0; i < 25; ++i) {
    for (int j = i + 1; j < 25; ++j) {
      pairs.push_back({"b" + std::to_string(i), "b" + std::to_string(j)});
    }
  }
  std::size_t total = 0;
  for (const auto& r : junctions_of_pairs(g, pairs)) total += r.junctions.size();
  return {pairs.size() == 300 && total == 7500,
          std::to_string(pairs.size()) + " pairs, " + std::to_string(total) +
              " junction entries (expected 7500)"};
}

// 7. Parent inheritance and chain closure hold; verified builds never trip the
// representative/ancestor/distinctness checks and raw pointers agree with
// the oracle at every scan step.
Outcome structural_invariants() {
  std::size_t builds = 0, checks = 0;
  for (const auto& [name, g] : suite()) {
    test::OracleTable oracle(g);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      std::optional<std::string> failure;
      JunctionBuildOptions opts;
      opts.verify_invariants = true;
      opts.observer = test::pointer_agreement_observer(g, s, oracle, failure);
      try {
        auto idx = build_junction_index(g, s, opts);
        ++builds;
        checks += idx.stats().invariant_checks;
        if (failure) return {false, name + ": " + *failure};
        if (auto e = test::check_parent_inheritance(g, idx, oracle)) return {false, name + ": " + *e};
        if (auto e = test::check_chain_closure(g, idx, oracle)) return {false, name + ": " + *e};
      } catch (const InvariantViolation& e) {
        return {false, name + " s=" + g.label(s) + ": " + e.what()};
      }
    }
  }
  return {true, std::to_string(builds) + " verified builds, " + std::to_string(checks) +
                    " scan-state checks, parent inheritance and chain closure hold"};
}

// 8. Byte-identical junction and LCA reports across repeated runs and
// adjacency shuffles.
Outcome determinism() {
  std::size_t comparisons = 0;
  for (const auto& name : testkit::fixture_names()) {
    const Digraph g = testkit::fixture(name);
    std::vector<LabelPair> pairs;
    for (const auto& u : g.labels()) {
      for (const auto& v : g.labels()) pairs.push_back({u, v});
    }
    pairs.push_back({g.label(0), "no-such-vertex"});

    auto render = [&](const Digraph& h, unsigned threads) {
      std::ostringstream out, err;
      for (auto format : {cli::Format::Tsv, cli::Format::Jsonl}) {
        cli::cmd_junctions(h, pairs, format, threads, out, err);
        cli::cmd_lcas(h, pairs, format, threads, out, err);
      }
      return out.str() + err.str();
    };

    const std::string baseline = render(g, 1);
    for (int run = 0; run < 3; ++run) {
      ++comparisons;
      if (render(g, run == 2 ? 3u : 1u) != baseline) {
        return {false, name + ": run " + std::to_string(run) + " differs"};
      }
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ++comparisons;
      if (render(testkit::shuffle_adjacency(g, seed), 1) != baseline) {
        return {false, name + ": adjacency shuffle " + std::to_string(seed) + " differs"};
      }
      // Also shuffle the edge-list lines, which renumbers vertices.
      std::vector<std::string> lines;
      std::istringstream text(serialize_edge_list(g));
      for (std::string line; std::getline(text, line);) lines.push_back(line);
      testkit::SplitMix64 rng(seed);
      for (std::size_t i = lines.size(); i > 1; --i) std::swap(lines[i - 1], lines[rng.below(i)]);
      std::string shuffled;
      for (const auto& line : lines) shuffled += line + "\n";
      if (g.arc_count() == 0) continue;
      ++comparisons;
      if (render(parse_edge_list(shuffled), 1) != baseline) {
        return {false, name + ": line shuffle " + std::to_string(seed) + " differs"};
      }
    }
  }
  return {true, std::to_string(testkit::fixture_names().size()) + " fixtures, " +
                    std::to_string(comparisons) + " byte-identical comparisons"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 oracle equivalence (all triples, n <= 10 suite + fixtures)", oracle_equivalence},
      {"2 flow oracle = path enumeration (n <= 8)", oracle_of_oracle},
      {"3 LCA equivalence + antichain", lca_equivalence},
      {"4 tree specialization (50 arborescences, n <= 200)", tree_specialization},
      {"5 arcs_examined <= m + n; all-sources timing", complexity_bound},
      {"6 worst-case listing size 25 x C(25,2)", worst_case_listing},
      {"7 structural invariants (inheritance, chain closure, pointer agreement)", structural_invariants},
      {"8 determinism across runs and shuffles", determinism},
  };

  int failures = 0;
  for (const auto& [title, check] : criteria) {
    Outcome outcome;
    const auto start = Clock::now();
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << title << " -- " << outcome.detail
              << " [" << seconds_since(start) << " s]" << std::endl;
    failures += outcome.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
