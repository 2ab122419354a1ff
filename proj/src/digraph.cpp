#include "junctions/digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace junctions {

namespace {

std::uint64_t arc_key(Vertex from, Vertex to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

Vertex DigraphBuilder::add_vertex(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  auto [it, inserted] =
      index_.try_emplace(std::string(label), static_cast<Vertex>(labels_.size()));
  if (!inserted) {
    throw std::invalid_argument("duplicate vertex label '" + std::string(label) + "'");
  }
  labels_.emplace_back(label);
  return it->second;
}

Vertex DigraphBuilder::vertex(std::string_view label) {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return add_vertex(label);
}

bool DigraphBuilder::add_arc(Vertex from, Vertex to) {
  if (from >= labels_.size() || to >= labels_.size()) {
    throw std::out_of_range("arc endpoint is not a vertex");
  }
  if (from == to) {
    throw std::invalid_argument("self-loop on '" + labels_[from] + "'");
  }
  if (!seen_.insert(arc_key(from, to)).second) return false;
  arcs_.push_back({from, to});
  return true;
}

Digraph DigraphBuilder::build() && {
  Digraph g;
  const std::size_t n = labels_.size();
  g.labels_ = std::move(labels_);
  g.index_ = std::move(index_);

  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  for (const Arc& a : arcs_) {
    ++out_deg[a.from];
    ++in_deg[a.to];
  }
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] = g.out_offsets_[v] + out_deg[v];
    g.in_offsets_[v + 1] = g.in_offsets_[v] + in_deg[v];
  }
  g.out_targets_.resize(arcs_.size());
  g.in_sources_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Arc& a : arcs_) {
    g.out_targets_[out_fill[a.from]++] = a.to;
    g.in_sources_[in_fill[a.to]++] = a.from;
  }
  arcs_.clear();
  seen_.clear();
  return g;
}

std::optional<Vertex> Digraph::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : out(u)) result.push_back({u, v});
  }
  return result;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  auto targets = out(u);
  return std::find(targets.begin(), targets.end(), v) != targets.end();
}

Digraph parse_edge_list(std::string_view text) {
  DigraphBuilder builder;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected '<src> <dst>', got " +
                                    std::to_string(fields.size()) + " field(s)");
    }
    if (fields[0] == fields[1]) {
      throw ParseError(line_no, "self-loop on '" + std::string(fields[0]) + "'");
    }
    builder.add_arc(fields[0], fields[1]);
  }
  return std::move(builder).build();
}

std::string serialize_edge_list(const Digraph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.arc_count());
  for (const Arc& a : g.arcs()) lines.push_back(g.label(a.from) + ' ' + g.label(a.to));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

DagCheck validate_dag(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  std::deque<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indegree[v] = g.in(v).size();
    if (indegree[v] == 0) ready.push_back(v);
  }

  TopologicalOrder topo;
  topo.order.reserve(n);
  while (!ready.empty()) {
    Vertex u = ready.front();
    ready.pop_front();
    topo.order.push_back(u);
    for (Vertex v : g.out(u)) {
      if (--indegree[v] == 0) ready.push_back(v);
    }
  }
  if (topo.order.size() == n) return topo;

  // Every leftover vertex keeps a leftover in-neighbour, so walking
  // backwards must revisit a vertex.
  Vertex start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::size_t> seen_at(n, SIZE_MAX);
  std::vector<Vertex> walk;
  Vertex cur = start;
  while (seen_at[cur] == SIZE_MAX) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    for (Vertex t : g.in(cur)) {
      if (indegree[t] > 0) {
        cur = t;
        break;
      }
    }
  }
  CycleCertificate cert;
  // walk[seen_at[cur]..] follows arcs backwards.
  cert.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), walk.end());
  std::reverse(cert.cycle.begin(), cert.cycle.end());
  std::rotate(cert.cycle.begin(),
              std::min_element(cert.cycle.begin(), cert.cycle.end()),
              cert.cycle.end());
  cert.cycle.push_back(cert.cycle.front());
  return cert;
}

std::size_t ReachabilityMatrix::row_count(Vertex u) const {
  std::size_t count = 0;
  for (std::uint64_t word : row(u)) count += static_cast<std::size_t>(std::popcount(word));
  return count;
}

ReachabilityMatrix reachability(const Digraph& g) {
  auto check = validate_dag(g);
  auto* topo = std::get_if<TopologicalOrder>(&check);
  if (topo == nullptr) throw std::invalid_argument("reachability: graph has a cycle");

  ReachabilityMatrix m;
  m.n_ = g.vertex_count();
  m.words_ = (m.n_ + 63) / 64;
  m.bits_.assign(m.n_ * m.words_, 0);

  for (auto it = topo->order.rbegin(); it != topo->order.rend(); ++it) {
    const Vertex u = *it;
    std::uint64_t* row = m.bits_.data() + u * m.words_;
    row[u / 64] |= std::uint64_t{1} << (u % 64);
    for (Vertex v : g.out(u)) {
      const std::uint64_t* child = m.bits_.data() + v * m.words_;
      for (std::size_t w = 0; w < m.words_; ++w) row[w] |= child[w];
    }
  }
  return m;
}

std::vector<Vertex> descendants(const Digraph& g, Vertex s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.out(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen[v]) result.push_back(v);
  }
  return result;
}

}  // namespace junctions
