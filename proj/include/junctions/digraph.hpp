#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

namespace junctions {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Arc {
  Vertex from;
  Vertex to;
  friend bool operator==(const Arc&, const Arc&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Digraph;

// Accumulates labelled vertices and arcs. Duplicate arcs are dropped,
// self-loops are rejected. Acyclicity is not checked here.
class DigraphBuilder {
 public:
  Vertex add_vertex(std::string_view label);
  Vertex vertex(std::string_view label);  // find-or-add

  // Returns false when the arc was already present.
  bool add_arc(Vertex from, Vertex to);
  bool add_arc(std::string_view from, std::string_view to) {
    const Vertex f = vertex(from);
    return add_arc(f, vertex(to));
  }

  std::size_t vertex_count() const { return labels_.size(); }

  Digraph build() &&;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Arc> arcs_;
  std::unordered_set<std::uint64_t> seen_;
};

// Immutable adjacency view of a directed graph. Vertices are 0..n-1, each
// carrying a label. Out- and in-lists keep arc insertion order.
class Digraph {
 public:
  Digraph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t arc_count() const { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex u) const {
    return {out_targets_.data() + out_offsets_[u],
            out_targets_.data() + out_offsets_[u + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  // Arcs in adjacency order: grouped by source, then by out-list position.
  std::vector<Arc> arcs() const;

  bool has_arc(Vertex u, Vertex v) const;

 private:
  friend class DigraphBuilder;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
};

// Line-oriented "<src> <dst>" text. Blank lines and lines starting with '#'
// are skipped. Labels get indices in order of first appearance.
Digraph parse_edge_list(std::string_view text);

// One arc per line, "src dst", lines sorted lexicographically.
std::string serialize_edge_list(const Digraph& g);

struct TopologicalOrder {
  std::vector<Vertex> order;
};

// v0 -> v1 -> ... -> v0; the first vertex is repeated at the end.
struct CycleCertificate {
  std::vector<Vertex> cycle;
};

using DagCheck = std::variant<TopologicalOrder, CycleCertificate>;

DagCheck validate_dag(const Digraph& g);

inline bool is_dag(const Digraph& g) {
  return std::holds_alternative<TopologicalOrder>(validate_dag(g));
}

// Dense n x n bit matrix; reaches(u, v) iff v == u or a directed path u -> v
// exists.
class ReachabilityMatrix {
 public:
  ReachabilityMatrix() = default;

  std::size_t size() const { return n_; }

  bool reaches(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }

  std::size_t row_count(Vertex u) const;

 private:
  friend ReachabilityMatrix reachability(const Digraph& g);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Throws std::invalid_argument when g has a cycle.
ReachabilityMatrix reachability(const Digraph& g);

// All vertices reachable from s, s included, in increasing index order.
std::vector<Vertex> descendants(const Digraph& g, Vertex s);

}  // namespace junctions
