#include "junctions/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "junctions/arborescence.hpp"
#include "junctions/oracle.hpp"

namespace junctions::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_labels(const Digraph& g, std::span<const Vertex> vertices) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += ',';
    out += g.label(vertices[i]);
  }
  return out;
}

Json label_array(const Digraph& g, std::span<const Vertex> vertices) {
  Json arr = Json::array();
  for (Vertex v : vertices) arr.push_back(g.label(v));
  return arr;
}

// Prints the certificate and returns false when g has a cycle.
bool require_dag(const Digraph& g, std::ostream& err) {
  auto check = validate_dag(g);
  if (auto* cycle = std::get_if<CycleCertificate>(&check)) {
    err << "cycle:";
    for (std::size_t i = 0; i < cycle->cycle.size(); ++i) {
      err << (i == 0 ? " " : " -> ") << g.label(cycle->cycle[i]);
    }
    err << '\n';
    return false;
  }
  return true;
}

template <typename Report>
int pair_exit_code(std::span<const Report> reports) {
  if (reports.empty()) return kSuccess;
  bool all_failed = std::all_of(reports.begin(), reports.end(),
                                [](const Report& r) { return r.error.has_value(); });
  return all_failed ? kUsageOrIo : kSuccess;
}

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      int value = std::stoi(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string triple_text(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  return "s=" + g.label(s) + " u=" + g.label(u) + " v=" + g.label(v);
}

}  // namespace

std::vector<LabelPair> parse_pairs(std::string_view text) {
  std::vector<LabelPair> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected '<label> <label>', got " +
                                    std::to_string(tokens.size()) + " field(s)");
    }
    pairs.push_back({tokens[0], tokens[1]});
  }
  return pairs;
}

void write_junction_reports(const Digraph& g, std::span<const PairReport> reports, Format format,
                            std::ostream& out) {
  for (const PairReport& r : reports) {
    if (format == Format::Tsv) {
      out << r.u << '\t' << r.v << '\t';
      if (r.error) {
        out << "error: " << *r.error;
      } else {
        out << join_labels(g, r.junctions);
      }
      out << '\n';
    } else {
      Json line;
      line["u"] = r.u;
      line["v"] = r.v;
      if (r.error) {
        line["error"] = *r.error;
      } else {
        line["junctions"] = label_array(g, r.junctions);
      }
      out << line.dump() << '\n';
    }
  }
}

void write_lca_reports(const Digraph& g, std::span<const LcaReport> reports, Format format,
                       std::ostream& out) {
  for (const LcaReport& r : reports) {
    if (format == Format::Tsv) {
      out << r.u << '\t' << r.v << '\t';
      if (r.error) {
        out << "error: " << *r.error << '\t';
      } else {
        out << join_labels(g, r.junctions) << '\t' << join_labels(g, r.lcas);
      }
      out << '\n';
    } else {
      Json line;
      line["u"] = r.u;
      line["v"] = r.v;
      if (r.error) {
        line["error"] = *r.error;
      } else {
        line["junctions"] = label_array(g, r.junctions);
        line["lcas"] = label_array(g, r.lcas);
      }
      out << line.dump() << '\n';
    }
  }
}

int cmd_validate(const Digraph& g, std::ostream& out, std::ostream& err) {
  auto check = validate_dag(g);
  if (std::holds_alternative<CycleCertificate>(check)) {
    require_dag(g, err);
    return kValidationFailure;
  }
  for (Vertex v : std::get<TopologicalOrder>(check).order) out << g.label(v) << '\n';
  return kSuccess;
}

int cmd_junctions(const Digraph& g, std::span<const LabelPair> pairs, Format format,
                  unsigned threads, std::ostream& out, std::ostream& err) {
  if (!require_dag(g, err)) return kValidationFailure;
  auto reports = junctions_of_pairs(g, pairs, threads);
  write_junction_reports(g, reports, format, out);
  return pair_exit_code<PairReport>(reports);
}

int cmd_lcas(const Digraph& g, std::span<const LabelPair> pairs, Format format, unsigned threads,
             std::ostream& out, std::ostream& err) {
  if (!require_dag(g, err)) return kValidationFailure;
  auto reports = lcas_of_pairs(g, pairs, threads);
  write_lca_reports(g, reports, format, out);
  return pair_exit_code<LcaReport>(reports);
}

int cmd_source_pairs(const Digraph& g, std::string_view source, std::ostream& out,
                     std::ostream& err) {
  auto s = g.find(source);
  if (!s) {
    err << "unknown source '" << source << "'\n";
    return kUsageOrIo;
  }
  if (!require_dag(g, err)) return kValidationFailure;
  JunctionIndex idx = build_junction_index(g, *s);
  std::vector<Vertex> members(idx.tree().vertex_of_post);
  sort_by_label(g, members);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (idx.is_junction(members[i], members[j])) {
        out << g.label(members[i]) << '\t' << g.label(members[j]) << '\n';
      }
    }
  }
  return kSuccess;
}

int cmd_dump_tree(const Digraph& g, std::string_view source, std::ostream& out,
                  std::ostream& err) {
  auto s = g.find(source);
  if (!s) {
    err << "unknown source '" << source << "'\n";
    return kUsageOrIo;
  }
  if (!require_dag(g, err)) return kValidationFailure;
  Arborescence arb = build_arborescence(g, *s);
  for (Vertex v : arb.vertex_of_post) {
    out << g.label(v) << ' ' << arb.post[v] << ' ' << arb.minpost[v] << ' '
        << g.label(arb.parent[v]) << '\n';
  }
  auto classes = classify_arcs(g, arb);
  auto counts = count_arc_classes(classes);
  out << '#';
  for (std::size_t c = 0; c < kArcClassCount; ++c) {
    out << ' ' << to_string(static_cast<ArcClass>(c)) << '=' << counts[c];
  }
  out << '\n';
  return kSuccess;
}

int check_against_oracle(const Digraph& g, std::size_t enumerate_max, std::string_view name,
                         std::ostream& out, std::ostream& err) {
  if (!require_dag(g, err)) return kValidationFailure;
  const std::size_t n = g.vertex_count();
  auto report = [&](const std::string& what) {
    err << "mismatch in " << name << ": " << what << "\nreproducer:\n"
        << serialize_edge_list(g);
    return kOracleMismatch;
  };

  std::size_t triples = 0;
  for (Vertex s = 0; s < n; ++s) {
    JunctionIndex idx = build_junction_index(g, s);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const bool flow = oracle::is_junction(g, s, u, v);
        if (idx.is_junction(u, v) != flow) {
          return report(triple_text(g, s, u, v) + " index=" + std::to_string(!flow) +
                        " oracle=" + std::to_string(flow));
        }
        if (n <= enumerate_max && oracle::enumerate_disjoint_path_pair(g, s, u, v) != flow) {
          return report(triple_text(g, s, u, v) + " enumeration=" + std::to_string(!flow) +
                        " flow=" + std::to_string(flow));
        }
        ++triples;
      }
    }
  }

  std::vector<LabelPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({g.label(u), g.label(v)});
  }
  auto lcas = lcas_of_pairs(g, pairs);
  for (const LcaReport& r : lcas) {
    const Vertex u = *g.find(r.u), v = *g.find(r.v);
    auto expected = oracle::lca_set(g, u, v);
    sort_by_label(g, expected);
    if (expected != r.lcas) {
      return report("lcas of (" + r.u + ", " + r.v + ") = [" + join_labels(g, r.lcas) +
                    "], oracle [" + join_labels(g, expected) + "]");
    }
  }
  out << name << ": n=" << n << " m=" << g.arc_count() << " triples=" << triples
      << " pairs=" << pairs.size() << " ok\n";
  return kSuccess;
}

int cmd_bench(const BenchConfig& config, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  out << std::left << std::setw(16) << "family" << std::right << std::setw(8) << "n"
      << std::setw(10) << "m" << std::setw(9) << "sources" << std::setw(12) << "build_ms"
      << std::setw(12) << "avg_us" << std::setw(14) << "max_examined" << std::setw(10) << "m+n"
      << std::setw(14) << "queries/s" << '\n';
  int status = kSuccess;
  for (std::size_t n : config.sizes) {
    testkit::GenSpec spec;
    spec.family = config.family;
    spec.n = n;
    spec.seed = config.seed;
    if (n > 1) spec.arc_prob = std::min(1.0, 2.0 * config.arcs_per_vertex / static_cast<double>(n - 1));
    spec.a = std::max<std::size_t>(1, n / 2);
    spec.b = std::max<std::size_t>(1, n - spec.a);
    const Digraph g = testkit::generate(spec);
    const std::size_t bound = g.arc_count() + g.vertex_count();
    const std::size_t sources = config.max_sources == 0
                                    ? g.vertex_count()
                                    : std::min(config.max_sources, g.vertex_count());

    testkit::SplitMix64 rng(config.seed ^ n);
    std::size_t max_examined = 0, hits = 0, queries = 0;
    Clock::duration build_time{}, query_time{};
    for (Vertex s = 0; s < sources; ++s) {
      auto t0 = Clock::now();
      JunctionIndex idx = build_junction_index(g, s);
      auto t1 = Clock::now();
      build_time += t1 - t0;
      max_examined = std::max(max_examined, idx.stats().arcs_examined);
      if (idx.stats().arcs_examined > bound) {
        err << "arcs_examined " << idx.stats().arcs_examined << " exceeds m+n=" << bound
            << " at source " << g.label(s) << '\n';
        status = kValidationFailure;
      }
      std::vector<std::pair<Vertex, Vertex>> batch(config.queries_per_source);
      for (auto& [u, v] : batch) {
        u = static_cast<Vertex>(rng.below(g.vertex_count()));
        v = static_cast<Vertex>(rng.below(g.vertex_count()));
      }
      auto q0 = Clock::now();
      for (auto [u, v] : batch) hits += idx.is_junction(u, v);
      query_time += Clock::now() - q0;
      queries += batch.size();
    }
    const double build_ms = std::chrono::duration<double, std::milli>(build_time).count();
    const double query_s = std::chrono::duration<double>(query_time).count();
    out << std::left << std::setw(16) << testkit::to_string(config.family) << std::right
        << std::setw(8) << g.vertex_count() << std::setw(10) << g.arc_count() << std::setw(9)
        << sources << std::setw(12) << std::fixed << std::setprecision(2) << build_ms
        << std::setw(12) << (sources ? 1000.0 * build_ms / static_cast<double>(sources) : 0.0)
        << std::setw(14) << max_examined << std::setw(10) << bound << std::setw(14)
        << std::setprecision(0) << (query_s > 0 ? static_cast<double>(queries) / query_s : 0.0)
        << '\n';
    out.unsetf(std::ios::fixed);
    (void)hits;
  }
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Junctions and lowest common ancestors in directed acyclic graphs", "junctions"};
  app.require_subcommand(1, 1);

  std::string graph_path, pairs_path, source, format_name = "tsv";
  unsigned threads = default_threads();
  const std::map<std::string, Format> formats{{"tsv", Format::Tsv}, {"jsonl", Format::Jsonl}};

  auto* validate = app.add_subcommand("validate", "Check acyclicity, print a topological order");
  validate->add_option("graph", graph_path, "Edge-list file")->required();

  auto add_pair_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", graph_path, "Edge-list file")->required();
    sub->add_option("pairs", pairs_path, "Pairs file, one '<u> <v>' per line")->required();
    sub->add_option("-f,--format", format_name, "Output format")
        ->check(CLI::IsMember({"tsv", "jsonl"}));
    sub->add_option("-j,--threads", threads,
                    std::string("Worker threads for per-source builds (default $") + kThreadsEnv +
                        " or 1)")
        ->check(CLI::PositiveNumber);
    return sub;
  };
  auto* junctions_cmd = add_pair_command("junctions", "List all junctions of each pair");
  auto* lcas_cmd = add_pair_command("lcas", "List all junctions and LCAs of each pair");

  auto* source_pairs = app.add_subcommand("source-pairs", "All pairs having a source as junction");
  source_pairs->add_option("graph", graph_path, "Edge-list file")->required();
  source_pairs->add_option("-s,--source", source, "Source label")->required();

  auto* dump_tree = app.add_subcommand("dump-tree", "Print the DFS arborescence of a source");
  dump_tree->add_option("graph", graph_path, "Edge-list file")->required();
  dump_tree->add_option("-s,--source", source, "Source label")->required();

  testkit::GenSpec gen_spec;
  std::string family_name = "random-dag";
  auto add_gen_options = [&](CLI::App* sub) {
    sub->add_option("--family", family_name,
                    "random-dag | worst-case-fig1 | kinship | arborescence | path | star");
    sub->add_option("-n,--n", gen_spec.n, "Vertex count");
    sub->add_option("--arc-prob", gen_spec.arc_prob, "Arc probability (random-dag)")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--a", gen_spec.a, "First layer size (worst-case-fig1)");
    sub->add_option("--b", gen_spec.b, "Second layer size (worst-case-fig1)");
    sub->add_option("--seed", gen_spec.seed, "PRNG seed");
  };

  auto* gen = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  add_gen_options(gen);

  std::size_t count = 1, enumerate_max = 8;
  auto* oracle_check =
      app.add_subcommand("oracle-check", "Sweep every triple, index against the flow oracle");
  oracle_check->add_option("--graph", graph_path, "Edge-list file (otherwise generate)");
  add_gen_options(oracle_check);
  oracle_check->add_option("--count", count, "Number of generated graphs (seeds seed..)");
  oracle_check->add_option("--enumerate-max", enumerate_max,
                           "Also run path enumeration for graphs up to this size");

  BenchConfig bench_config;
  std::string bench_family = "random-dag";
  auto* bench = app.add_subcommand("bench", "Per-source build time and query throughput");
  bench->add_option("--family", bench_family, "Graph family");
  bench->add_option("--sizes", bench_config.sizes, "Comma-separated vertex counts")
      ->delimiter(',')
      ->required();
  bench->add_option("--seed", bench_config.seed, "PRNG seed");
  bench->add_option("--arcs-per-vertex", bench_config.arcs_per_vertex,
                    "Target m/n for random-dag");
  bench->add_option("--max-sources", bench_config.max_sources, "Limit sources (0 = all)");
  bench->add_option("--queries", bench_config.queries_per_source, "Queries per source");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageOrIo;
  }

  const Format format = formats.at(format_name);
  try {
    if (gen->parsed() || (oracle_check->parsed() && graph_path.empty())) {
      auto family = testkit::parse_family(family_name);
      if (!family) {
        err << "unknown family '" << family_name << "'\n";
        return kUsageOrIo;
      }
      gen_spec.family = *family;
      if (gen->parsed()) {
        out << serialize_edge_list(testkit::generate(gen_spec));
        return kSuccess;
      }
      for (std::size_t i = 0; i < count; ++i) {
        testkit::GenSpec spec = gen_spec;
        spec.seed = gen_spec.seed + i;
        const std::string name = std::string(testkit::to_string(spec.family)) +
                                 " n=" + std::to_string(spec.n) + " seed=" + std::to_string(spec.seed);
        int rc = check_against_oracle(testkit::generate(spec), enumerate_max, name, out, err);
        if (rc != kSuccess) return rc;
      }
      return kSuccess;
    }
    if (bench->parsed()) {
      auto family = testkit::parse_family(bench_family);
      if (!family) {
        err << "unknown family '" << bench_family << "'\n";
        return kUsageOrIo;
      }
      bench_config.family = *family;
      return cmd_bench(bench_config, out, err);
    }

    const Digraph g = parse_edge_list(read_file(graph_path));
    if (validate->parsed()) return cmd_validate(g, out, err);
    if (source_pairs->parsed()) return cmd_source_pairs(g, source, out, err);
    if (dump_tree->parsed()) return cmd_dump_tree(g, source, out, err);
    if (oracle_check->parsed()) return check_against_oracle(g, enumerate_max, graph_path, out, err);

    const auto pairs = parse_pairs(read_file(pairs_path));
    if (junctions_cmd->parsed()) return cmd_junctions(g, pairs, format, threads, out, err);
    if (lcas_cmd->parsed()) return cmd_lcas(g, pairs, format, threads, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace junctions::cli
