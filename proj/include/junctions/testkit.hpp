#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "junctions/digraph.hpp"

namespace junctions::testkit {

// SplitMix64 (Steele, Lea, Flood). Bounded integers use rejection sampling
// and doubles take the top 53 bits, so streams match on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return UINT64_MAX; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1).
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Family { RandomDag, WorstCase, Kinship, Arborescence, Path, Star };

std::optional<Family> parse_family(std::string_view name);
const char* to_string(Family f);

struct GenSpec {
  Family family = Family::RandomDag;
  std::size_t n = 10;
  double arc_prob = 0.3;  // random-dag
  std::size_t a = 1;      // worst-case first layer
  std::size_t b = 2;      // worst-case second layer
  std::uint64_t seed = 1;
};

// Vertices "v0".."v{n-1}"; arcs follow a uniformly random rank order, each
// forward pair included independently with probability arc_prob.
Digraph gen_random_dag(std::size_t n, double arc_prob, std::uint64_t seed);

// First layer "a0".., second layer "b0"..; every first-layer vertex points
// at every second-layer vertex.
Digraph gen_worst_case(std::size_t a, std::size_t b);

// "p0".."p{n-1}" in birth order; each gets 0, 1 or 2 distinct earlier
// parents.
Digraph gen_kinship(std::size_t n, std::uint64_t seed);

// Random recursive tree rooted at "t0": vertex i hangs under a uniform
// earlier vertex.
Digraph gen_arborescence(std::size_t n, std::uint64_t seed);

Digraph gen_path(std::size_t n);

// "s" pointing at "x0".."x{n-2}".
Digraph gen_star(std::size_t n);

Digraph generate(const GenSpec& spec);

// Same vertices and labels, arcs re-inserted in a shuffled order, which
// permutes every out- and in-list.
Digraph shuffle_adjacency(const Digraph& g, std::uint64_t seed);

// Named small graphs used across test suites: diamond, chain, star, fig1
// (worst case 3x4), stacked-diamond, two-junctions, branching, lone.
Digraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace junctions::testkit
