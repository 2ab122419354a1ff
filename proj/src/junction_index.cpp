#include "junctions/junction_index.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace junctions {

namespace {

struct Frame {
  Vertex z;
  std::int64_t w_post;  // post of the vertex the scan looks at next
};

void verify_scan_state(const Arborescence& arb, std::span<const Vertex> p, Vertex branch_root,
                       Vertex z, std::int32_t w_post) {
  if (p[z] != z) throw InvariantViolation("scan owner is not a representative");
  for (std::int32_t q = arb.minpost[branch_root]; q <= arb.post[branch_root]; ++q) {
    const Vertex x = arb.vertex_of_post[static_cast<std::size_t>(q)];
    if (q > w_post) {
      const Vertex r = p[x];
      if (r == kNoVertex || !arb.contains(r) || p[r] != r) {
        throw InvariantViolation("scanned vertex does not point at a representative");
      }
      if (!arb.in_subtree(x, r)) {
        throw InvariantViolation("representative is not a tree ancestor");
      }
    }
    if (!arb.in_subtree(x, z) && p[x] == p[z]) {
      throw InvariantViolation("vertex outside T_z shares the owner's set");
    }
  }
}

}  // namespace

std::vector<Vertex> init_representatives(const Arborescence& arb) {
  std::vector<Vertex> p(arb.parent);
  p[arb.root] = arb.root;
  for (Vertex child : arb.children(arb.root)) p[child] = child;
  return p;
}

Vertex find_representative(std::vector<Vertex>& p, Vertex v) {
  Vertex r = v;
  while (p[r] != r) r = p[r];
  while (p[v] != r) v = std::exchange(p[v], r);
  return r;
}

void single_junction_all_pairs(const Digraph& g, const Arborescence& arb,
                               std::vector<Vertex>& p, Vertex z, JunctionStats& stats,
                               const JunctionBuildOptions& options) {
  const Vertex branch_root = z == arb.root ? z : arb.branch[z];
  const bool checking = options.verify_invariants || static_cast<bool>(options.observer);

  std::vector<Frame> frames;
  if (arb.subtree_size(z) > 1) frames.push_back({z, arb.post[z] - 1});

  while (!frames.empty()) {
    Frame& f = frames.back();
    const std::optional<Vertex> w = arb.vertex_of(f.w_post);
    const Vertex owner = f.z;

    if (checking) {
      const std::int32_t w_post = arb.post_of(w);
      if (options.verify_invariants) {
        verify_scan_state(arb, p, branch_root, owner, w_post);
        ++stats.invariant_checks;
      }
      if (options.observer) options.observer(ScanState{arb, p, branch_root, owner, w});
    }

    if (arb.post_of(w) < arb.minpost[owner]) {
      frames.pop_back();
      continue;
    }

    const Vertex owner_set = find_representative(p, owner);
    bool splits = false;
    for (Vertex t : g.in(*w)) {
      ++stats.arcs_examined;
      if (!arb.contains(t)) continue;
      if (options.verify_invariants) {
        const Vertex raw = p[t];
        if (find_representative(p, t) != raw) {
          throw InvariantViolation("in-neighbour pointer is not final when read");
        }
      }
      if (find_representative(p, t) != owner_set) {
        splits = true;
        break;
      }
    }

    if (splits) {
      p[*w] = *w;
      // Resume below T_w once the nested scan finishes.
      f.w_post = arb.minpost[*w] - 1;
      if (arb.subtree_size(*w) > 1) frames.push_back({*w, arb.post[*w] - 1});
    } else {
      p[*w] = owner;
      f.w_post = arb.post[*w] - 1;
    }
  }
}

JunctionIndex build_junction_index(const Digraph& g, Vertex s,
                                   const JunctionBuildOptions& options) {
  Arborescence arb = build_arborescence(g, s);
  std::vector<Vertex> p = init_representatives(arb);
  JunctionStats stats;

  std::vector<Vertex> roots(arb.children(s).begin(), arb.children(s).end());
  std::sort(roots.begin(), roots.end(),
            [&](Vertex a, Vertex b) { return arb.post[a] > arb.post[b]; });
  for (Vertex child : roots) single_junction_all_pairs(g, arb, p, child, stats, options);

  for (Vertex v : arb.vertex_of_post) find_representative(p, v);
  return JunctionIndex(std::move(arb), std::move(p), stats);
}

std::vector<std::vector<Vertex>> JunctionIndex::classes() const {
  std::vector<std::vector<Vertex>> result;
  std::vector<std::size_t> slot(p_.size(), SIZE_MAX);
  for (Vertex v : tree_.vertex_of_post) {
    if (v == tree_.root || p_[v] != v) continue;
    slot[v] = result.size();
    result.emplace_back();
  }
  for (Vertex v : tree_.vertex_of_post) {
    if (v != tree_.root) result[slot[p_[v]]].push_back(v);
  }
  return result;
}

void JunctionIndex::for_each_pair(const std::function<void(Vertex, Vertex)>& emit) const {
  const Vertex s = tree_.root;
  for (Vertex v : tree_.vertex_of_post) {
    if (v != s) emit(s, v);
  }
  auto parts = classes();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (Vertex u : parts[i]) {
        for (Vertex v : parts[j]) emit(u, v);
      }
    }
  }
}

std::size_t JunctionIndex::pair_count() const {
  std::size_t total = tree_.size() - 1;
  std::size_t seen = 0;
  for (const auto& part : classes()) {
    total += seen * part.size();
    seen += part.size();
  }
  return total;
}

void sort_by_label(const Digraph& g, std::vector<Vertex>& vertices) {
  std::sort(vertices.begin(), vertices.end(),
            [&](Vertex a, Vertex b) { return g.label(a) < g.label(b); });
}

std::vector<PairReport> junctions_of_pairs(const Digraph& g, std::span<const LabelPair> pairs,
                                           unsigned threads) {
  std::vector<PairReport> reports(pairs.size());
  std::vector<std::pair<Vertex, Vertex>> resolved(pairs.size(), {kNoVertex, kNoVertex});
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    reports[i].u = pairs[i].u;
    reports[i].v = pairs[i].v;
    auto u = g.find(pairs[i].u);
    auto v = g.find(pairs[i].v);
    if (!u || !v) {
      reports[i].error = "unknown label '" + (u ? pairs[i].v : pairs[i].u) + "'";
      continue;
    }
    resolved[i] = {*u, *v};
    if (*u != *v) active.push_back(i);
  }
  if (active.empty()) return reports;

  const std::size_t n = g.vertex_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::vector<std::vector<Vertex>>> partial(
      threads, std::vector<std::vector<Vertex>>(pairs.size()));
  std::atomic<Vertex> next{0};

  auto work = [&](unsigned worker) {
    auto& found = partial[worker];
    for (Vertex s = next++; s < n; s = next++) {
      JunctionIndex idx = build_junction_index(g, s);
      for (std::size_t i : active) {
        if (idx.is_junction(resolved[i].first, resolved[i].second)) found[i].push_back(s);
      }
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  for (std::size_t i : active) {
    auto& out = reports[i].junctions;
    for (auto& found : partial) out.insert(out.end(), found[i].begin(), found[i].end());
    sort_by_label(g, out);
  }
  return reports;
}

}  // namespace junctions
