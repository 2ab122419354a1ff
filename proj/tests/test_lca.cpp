#include "junctions/lca.hpp"

#include <gtest/gtest.h>

#include "junctions/oracle.hpp"
#include "test_support.hpp"

namespace junctions {
namespace {

using test::vertex;

std::vector<std::string> labels_of(const Digraph& g, const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

TEST(LcasOfPairs, DiamondSingleJunction) {
  Digraph g = testkit::fixture("diamond");
  std::vector<LabelPair> pairs{{"a", "b"}};
  auto r = lcas_of_pairs(g, pairs);
  EXPECT_EQ(labels_of(g, r[0].junctions), std::vector<std::string>{"s"});
  EXPECT_EQ(labels_of(g, r[0].lcas), std::vector<std::string>{"s"});
}

TEST(LcasOfPairs, HigherJunctionFilteredOut) {
  Digraph g = testkit::fixture("two-junctions");
  std::vector<LabelPair> pairs{{"a", "b"}};
  auto r = lcas_of_pairs(g, pairs);
  EXPECT_EQ(labels_of(g, r[0].junctions), (std::vector<std::string>{"r", "s"}));
  EXPECT_EQ(labels_of(g, r[0].lcas), std::vector<std::string>{"s"});
  auto expected = oracle::lca_set(g, vertex(g, "a"), vertex(g, "b"));
  EXPECT_EQ(expected, r[0].lcas);
}

TEST(LcasOfPairs, SameVertexAndUnknownLabel) {
  Digraph g = testkit::fixture("diamond");
  std::vector<LabelPair> pairs{{"t", "t"}, {"zz", "t"}};
  auto r = lcas_of_pairs(g, pairs);
  EXPECT_TRUE(r[0].junctions.empty());
  EXPECT_TRUE(r[0].lcas.empty());
  ASSERT_TRUE(r[1].error.has_value());
  EXPECT_TRUE(r[1].lcas.empty());
}

TEST(FilterLowest, KeepsAntichainOfLowest) {
  Digraph g = testkit::gen_path(4);
  auto reach = reachability(g);
  std::vector<Vertex> js{0, 1, 3};
  EXPECT_EQ(filter_lowest(reach, js), std::vector<Vertex>{3});
  EXPECT_TRUE(filter_lowest(reach, {}).empty());
}

TEST(LcasOfPairs, MatchesOracleAndFormsAntichain) {
  for (const auto& [name, g] : test::small_suite(90)) {
    std::vector<LabelPair> pairs;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) pairs.push_back({g.label(u), g.label(v)});
    }
    auto reach = reachability(g);
    auto reports = lcas_of_pairs(g, reach, pairs);
    for (const auto& r : reports) {
      const Vertex u = vertex(g, r.u), v = vertex(g, r.v);
      auto expected = oracle::lca_set(g, u, v);
      sort_by_label(g, expected);
      EXPECT_EQ(r.lcas, expected) << name << " (" << r.u << "," << r.v << ")";
      EXPECT_EQ(r.lcas.empty(), r.junctions.empty());
      for (Vertex x : r.lcas) {
        EXPECT_NE(std::find(r.junctions.begin(), r.junctions.end(), x), r.junctions.end());
        for (Vertex y : r.lcas) {
          if (x != y) EXPECT_FALSE(reach.reaches(x, y)) << name;
        }
      }
    }
  }
}

TEST(LcasOfPairs, TreeInputsGiveOneLca) {
  Digraph g = testkit::gen_arborescence(60, 11);
  std::vector<LabelPair> pairs;
  for (Vertex u = 0; u < 60; ++u) {
    for (Vertex v = u + 1; v < 60; ++v) pairs.push_back({g.label(u), g.label(v)});
  }
  for (const auto& r : lcas_of_pairs(g, pairs)) {
    const Vertex lca = test::naive_tree_lca(g, vertex(g, r.u), vertex(g, r.v));
    EXPECT_EQ(r.lcas, std::vector<Vertex>{lca});
  }
}

}  // namespace
}  // namespace junctions
