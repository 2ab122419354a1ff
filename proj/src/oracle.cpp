#include "junctions/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>

namespace junctions::oracle {

namespace {

class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, int capacity) {
    adjacency_[from].push_back(edges_.size());
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  // Edmonds-Karp, stopping after `limit` units.
  int max_flow(std::size_t source, std::size_t sink, int limit) {
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

 private:
  struct Edge {
    std::size_t to;
    int capacity;
  };

  bool augment(std::size_t source, std::size_t sink) {
    std::vector<std::size_t> via(adjacency_.size(), SIZE_MAX);
    std::vector<char> seen(adjacency_.size(), 0);
    std::deque<std::size_t> queue{source};
    seen[source] = 1;
    while (!queue.empty() && !seen[sink]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t e : adjacency_[x]) {
        const Edge& edge = edges_[e];
        if (edge.capacity > 0 && !seen[edge.to]) {
          seen[edge.to] = 1;
          via[edge.to] = e;
          queue.push_back(edge.to);
        }
      }
    }
    if (!seen[sink]) return false;
    for (std::size_t x = sink; x != source; x = edges_[via[x] ^ 1].to) {
      --edges_[via[x]].capacity;
      ++edges_[via[x] ^ 1].capacity;
    }
    return true;
  }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

std::vector<char> reachable_from(const Digraph& g, Vertex s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.out(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

int max_flow(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  if (s == u || s == v || u == v) {
    throw std::invalid_argument("oracle::max_flow needs distinct s, u, v");
  }
  const std::size_t n = g.vertex_count();
  auto in_node = [](Vertex x) { return 2 * static_cast<std::size_t>(x); };
  auto out_node = [](Vertex x) { return 2 * static_cast<std::size_t>(x) + 1; };
  const std::size_t sink = 2 * n;

  FlowNetwork net(2 * n + 1);
  for (Vertex x = 0; x < n; ++x) {
    if (x != s) net.add_edge(in_node(x), out_node(x), 1);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.out(a)) {
      if (b != s) net.add_edge(out_node(a), in_node(b), 1);
    }
  }
  net.add_edge(out_node(u), sink, 1);
  net.add_edge(out_node(v), sink, 1);
  return net.max_flow(out_node(s), sink, 3);
}

bool is_junction(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  if (u == v) return false;
  if (s == u) return reachable_from(g, s)[v] != 0;
  if (s == v) return reachable_from(g, s)[u] != 0;
  return max_flow(g, s, u, v) == 2;
}

std::vector<Vertex> junction_set(const Digraph& g, Vertex u, Vertex v) {
  std::vector<Vertex> result;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (is_junction(g, s, u, v)) result.push_back(s);
  }
  return result;
}

std::vector<Vertex> lca_set(const Digraph& g, Vertex u, Vertex v) {
  const auto junctions = junction_set(g, u, v);
  std::vector<Vertex> result;
  for (Vertex s : junctions) {
    const auto below = reachable_from(g, s);
    bool lowest = std::none_of(junctions.begin(), junctions.end(),
                               [&](Vertex other) { return other != s && below[other]; });
    if (lowest) result.push_back(s);
  }
  return result;
}

bool enumerate_disjoint_path_pair(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  const auto reach = reachable_from(g, s);
  std::vector<int> local(g.vertex_count(), -1);
  int count = 0;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (reach[x]) local[x] = count++;
  }
  if (static_cast<std::size_t>(count) > kMaxEnumerationTree) {
    throw std::length_error("enumerate_disjoint_path_pair: " + std::to_string(count) +
                            " descendants exceed the enumeration limit");
  }
  if (u == v || !reach[u] || !reach[v]) return false;

  // Vertex sets of all s -> target paths, as bitmasks over local ids.
  auto paths_to = [&](Vertex target) {
    std::vector<std::uint32_t> found;
    std::function<void(Vertex, std::uint32_t)> walk = [&](Vertex x, std::uint32_t mask) {
      if (x == target) {
        found.push_back(mask);
        return;
      }
      for (Vertex y : g.out(x)) walk(y, mask | (1u << local[y]));
    };
    walk(s, 1u << local[s]);
    return found;
  };

  const std::uint32_t source_bit = 1u << local[s];
  const auto to_u = paths_to(u);
  const auto to_v = paths_to(v);
  for (std::uint32_t pu : to_u) {
    for (std::uint32_t pv : to_v) {
      if ((pu & pv) == source_bit) return true;
    }
  }
  return false;
}

}  // namespace junctions::oracle
