#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "junctions/digraph.hpp"
#include "junctions/junction_index.hpp"
#include "junctions/lca.hpp"
#include "junctions/testkit.hpp"

namespace junctions::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageOrIo = 1,
  kValidationFailure = 2,
  kOracleMismatch = 3,
};

enum class Format { Tsv, Jsonl };

inline constexpr const char* kThreadsEnv = "JUNCTIONS_THREADS";

// "<label> <label>" per line; blank and '#' lines skipped; u == v allowed.
std::vector<LabelPair> parse_pairs(std::string_view text);

// TSV: "u<TAB>v<TAB>j1,j2,..."; an error entry puts "error: ..." in the
// third column. JSONL: {"u":..,"v":..,"junctions":[..]} or {"u","v","error"}.
void write_junction_reports(const Digraph& g, std::span<const PairReport> reports, Format format,
                            std::ostream& out);

// As above with a fourth TSV column / "lcas" field.
void write_lca_reports(const Digraph& g, std::span<const LcaReport> reports, Format format,
                       std::ostream& out);

int cmd_validate(const Digraph& g, std::ostream& out, std::ostream& err);
int cmd_junctions(const Digraph& g, std::span<const LabelPair> pairs, Format format,
                  unsigned threads, std::ostream& out, std::ostream& err);
int cmd_lcas(const Digraph& g, std::span<const LabelPair> pairs, Format format, unsigned threads,
             std::ostream& out, std::ostream& err);

// Every unordered pair with `source` as a junction, "u<TAB>v" with u < v by
// label, lines in lexicographic order.
int cmd_source_pairs(const Digraph& g, std::string_view source, std::ostream& out,
                     std::ostream& err);

int cmd_dump_tree(const Digraph& g, std::string_view source, std::ostream& out,
                  std::ostream& err);

// Compares the index against the flow oracle on every ordered triple, the
// flow oracle against path enumeration when n <= enumerate_max, and LCA
// reports against the oracle. Reports the first mismatch with a reproducer.
int check_against_oracle(const Digraph& g, std::size_t enumerate_max, std::string_view name,
                         std::ostream& out, std::ostream& err);

struct BenchConfig {
  testkit::Family family = testkit::Family::RandomDag;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 1;
  double arcs_per_vertex = 10.0;  // random-dag density target
  std::size_t max_sources = 0;    // 0: every vertex
  std::size_t queries_per_source = 1000;
};

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err);

// Entry point used by the `junctions` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace junctions::cli
