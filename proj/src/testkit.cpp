#include "junctions/testkit.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace junctions::testkit {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
  // Reject the top partial bucket.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

namespace {

void add_numbered(DigraphBuilder& b, std::string_view prefix, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) b.add_vertex(std::string(prefix) + std::to_string(i));
}

template <typename Rng>
void shuffle(std::vector<Vertex>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[rng.below(i)]);
  }
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random-dag") return Family::RandomDag;
  if (name == "worst-case-fig1" || name == "worst-case") return Family::WorstCase;
  if (name == "kinship") return Family::Kinship;
  if (name == "arborescence") return Family::Arborescence;
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  return std::nullopt;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::RandomDag: return "random-dag";
    case Family::WorstCase: return "worst-case-fig1";
    case Family::Kinship: return "kinship";
    case Family::Arborescence: return "arborescence";
    case Family::Path: return "path";
    case Family::Star: return "star";
  }
  return "?";
}

Digraph gen_random_dag(std::size_t n, double arc_prob, std::uint64_t seed) {
  if (!(arc_prob >= 0.0 && arc_prob <= 1.0)) {
    throw std::invalid_argument("gen_random_dag: arc_prob outside [0, 1]");
  }
  SplitMix64 rng(seed);
  DigraphBuilder b;
  add_numbered(b, "v", n);
  std::vector<Vertex> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<Vertex>(i);
  shuffle(rank, rng);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.unit() < arc_prob) b.add_arc(rank[i], rank[j]);
    }
  }
  return std::move(b).build();
}

Digraph gen_worst_case(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1) throw std::invalid_argument("gen_worst_case: layers must be non-empty");
  DigraphBuilder builder;
  add_numbered(builder, "a", a);
  add_numbered(builder, "b", b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      builder.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    }
  }
  return std::move(builder).build();
}

Digraph gen_kinship(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_kinship: n must be positive");
  SplitMix64 rng(seed);
  DigraphBuilder b;
  add_numbered(b, "p", n);
  for (std::size_t child = 1; child < n; ++child) {
    const std::size_t parents = std::min<std::size_t>(rng.below(3), child);
    if (parents == 0) continue;
    const Vertex first = static_cast<Vertex>(rng.below(child));
    b.add_arc(first, static_cast<Vertex>(child));
    if (parents == 2) {
      Vertex second = static_cast<Vertex>(rng.below(child - 1));
      if (second >= first) ++second;
      b.add_arc(second, static_cast<Vertex>(child));
    }
  }
  return std::move(b).build();
}

Digraph gen_arborescence(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_arborescence: n must be positive");
  SplitMix64 rng(seed);
  DigraphBuilder b;
  add_numbered(b, "t", n);
  for (std::size_t i = 1; i < n; ++i) {
    b.add_arc(static_cast<Vertex>(rng.below(i)), static_cast<Vertex>(i));
  }
  return std::move(b).build();
}

Digraph gen_path(std::size_t n) {
  DigraphBuilder b;
  add_numbered(b, "v", n);
  for (std::size_t i = 1; i < n; ++i) b.add_arc(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return std::move(b).build();
}

Digraph gen_star(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gen_star: n must be positive");
  DigraphBuilder b;
  const Vertex center = b.add_vertex("s");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b.add_arc(center, b.add_vertex("x" + std::to_string(i)));
  }
  return std::move(b).build();
}

Digraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::RandomDag: return gen_random_dag(spec.n, spec.arc_prob, spec.seed);
    case Family::WorstCase: return gen_worst_case(spec.a, spec.b);
    case Family::Kinship: return gen_kinship(spec.n, spec.seed);
    case Family::Arborescence: return gen_arborescence(spec.n, spec.seed);
    case Family::Path: return gen_path(spec.n);
    case Family::Star: return gen_star(spec.n);
  }
  throw std::invalid_argument("unknown family");
}

Digraph shuffle_adjacency(const Digraph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto arcs = g.arcs();
  for (std::size_t i = arcs.size(); i > 1; --i) std::swap(arcs[i - 1], arcs[rng.below(i)]);
  DigraphBuilder b;
  for (const auto& label : g.labels()) b.add_vertex(label);
  for (const Arc& a : arcs) b.add_arc(a.from, a.to);
  return std::move(b).build();
}

Digraph fixture(std::string_view name) {
  if (name == "diamond") return parse_edge_list("s a\ns b\na t\nb t\n");
  if (name == "chain") return parse_edge_list("s a\na b\n");
  if (name == "star") return parse_edge_list("s x\ns y\ns z\n");
  if (name == "fig1") return gen_worst_case(3, 4);
  if (name == "stacked-diamond") {
    return parse_edge_list("s a\ns b\na t\nb t\nt c\nt d\nc q\nd q\n");
  }
  // r and s both junctions of (a, b); only s is lowest.
  if (name == "two-junctions") {
    return parse_edge_list("r s\ns a\ns b\nr a2\na2 a\nr b2\nb2 b\n");
  }
  // b -> c is an internal crossing arc under a.
  if (name == "branching") return parse_edge_list("s a\na c\na b\nb c\n");
  if (name == "lone") {
    DigraphBuilder b;
    b.add_vertex("s");
    return std::move(b).build();
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names() {
  return {"diamond", "chain", "star", "fig1", "stacked-diamond", "two-junctions", "branching",
          "lone"};
}

}  // namespace junctions::testkit
