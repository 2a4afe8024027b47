// Copyright 2026 The streamcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// streamcc: command-line front end for the semi-streaming correlation
// clusterer. Exit codes: 0 success, 1 property-check failure, 2 usage or
// input-format error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamcc/streamcc.hpp"

namespace {

using nlohmann::ordered_json;
using streamcc::Clustering;
using streamcc::Error;
using streamcc::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

/// Writes to the file at `path`, or to `fallback` when path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

ordered_json cost_json(const streamcc::CostReport& cost) {
  return ordered_json{{"cut_positive", cost.cut_positive},
                      {"joined_negative", cost.joined_negative},
                      {"total", cost.total}};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string edge_digest(const streamcc::PositiveGraph& g) {
  std::ostringstream text;
  for (const auto& e : g.edges()) text << e.u << ' ' << e.v << '\n';
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(text.str());
  return hex.str();
}

// ---------------------------------------------------------------- cluster

struct ClusterArgs {
  std::string input = "-";
  std::optional<std::size_t> n;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  bool halved = false;
  bool order_check = false;
  bool with_cost = false;
  std::string out;
  std::string summary;
};

int run_cluster(const ClusterArgs& args) {
  const bool from_stdin = args.input == "-";
  if (from_stdin && !args.n) {
    throw UsageError("--n is required when reading edges from stdin");
  }
  if (from_stdin && (args.order_check || args.with_cost)) {
    throw UsageError("--order-check and --cost need a file input");
  }
  if (args.k < 2) throw UsageError("--k must be at least 2");

  std::size_t n = 0;
  if (args.n) {
    n = *args.n;
  } else {
    std::ifstream scan = open_input(args.input);
    n = streamcc::scan_vertex_count(scan);
  }
  if (n == 0) throw UsageError("instance has no vertices; pass --n");

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!from_stdin) {
    file = open_input(args.input);
    in = &file;
  }
  streamcc::EdgeListReader reader(*in);
  if (reader.declared_n() && *reader.declared_n() != n) {
    throw UsageError("header declares n = " +
                     std::to_string(*reader.declared_n()) + " but --n is " +
                     std::to_string(n));
  }
  reader.set_vertex_limit(n);
  const streamcc::StreamResult result = streamcc::cluster_stream(
      [&reader] { return reader.next(); }, n, args.k, args.seed, args.halved);

  int status = kExitOk;
  std::optional<bool> order_check_passed;
  std::optional<streamcc::CostReport> cost;
  if (args.order_check || args.with_cost) {
    std::ifstream again = open_input(args.input);
    streamcc::EdgeList list = streamcc::read_edge_list(again);
    list.n = n;
    if (args.with_cost) {
      cost = streamcc::disagreement_cost(result.clustering,
                                         streamcc::to_positive_graph(list));
    }
    if (args.order_check) {
      std::reverse(list.edges.begin(), list.edges.end());
      const auto reversed = streamcc::cluster_stream(list.edges, n, args.k,
                                                     args.seed, args.halved);
      order_check_passed = reversed.clustering == result.clustering;
      if (!*order_check_passed) {
        std::cerr << "order check FAILED: reversed stream gives a different "
                     "clustering\n";
        status = kExitCheckFailed;
      }
    }
  }

  Sink tsv(args.out, std::cout);
  streamcc::write_clustering_tsv(tsv.get(), result.clustering);

  const auto& stats = result.stats;
  ordered_json summary{
      {"n", n},
      {"k", args.k},
      {"seed", args.seed},
      {"halved", args.halved},
      {"num_clusters", result.clustering.num_clusters()},
      {"num_singletons", result.clustering.num_singletons()},
      {"edges_seen", stats.edges_seen},
      {"positive_edges", stats.positive_edges},
      {"negative_edges", stats.negative_edges},
      {"self_loops", stats.self_loops},
      {"conflicting_labels", stats.conflicting_labels},
      {"peak_entries", stats.peak_entries},
      {"entry_bound", args.k * n},
  };
  if (cost) summary["cost"] = cost_json(*cost);
  if (order_check_passed) summary["order_check"] = *order_check_passed;
  summary["phase_times"] = ordered_json{{"init_s", stats.init_seconds},
                                        {"stream_s", stats.stream_seconds},
                                        {"finalize_s", stats.finalize_seconds}};
  Sink json(args.summary, std::cerr);
  json.get() << summary.dump(2) << '\n';
  return status;
}

// ---------------------------------------------------------------- eval

int run_eval(const std::string& clustering_path, const std::string& edges_path) {
  std::ifstream cin_file = open_input(clustering_path);
  const Clustering c = streamcc::read_clustering_tsv(cin_file);
  std::ifstream ein = open_input(edges_path);
  streamcc::EdgeListReader probe(ein);
  const auto declared = probe.declared_n();
  ein.close();

  std::ifstream edges_in = open_input(edges_path);
  streamcc::EdgeList list = streamcc::read_edge_list(edges_in);
  if (declared ? *declared != c.size() : list.n > c.size()) {
    throw UsageError("clustering covers " + std::to_string(c.size()) +
                     " vertices but the edge list has " +
                     std::to_string(list.n));
  }
  list.n = c.size();
  const auto cost =
      streamcc::disagreement_cost(c, streamcc::to_positive_graph(list));
  std::cout << cost_json(cost).dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- compare

int run_compare(const std::string& edges_path, std::size_t k,
                std::vector<std::uint64_t> seeds) {
  if (k < 2) throw UsageError("--k must be at least 2");
  std::ifstream in = open_input(edges_path);
  const streamcc::EdgeList list = streamcc::read_edge_list(in);
  if (list.n == 0) throw UsageError("instance has no vertices");
  const streamcc::PositiveGraph g = streamcc::to_positive_graph(list);
  const std::size_t n = list.n;
  if (seeds.empty()) {
    for (std::uint64_t s = 0; s < 10; ++s) seeds.push_back(s);
  }

  int status = kExitOk;
  for (std::uint64_t seed : seeds) {
    const auto pi = streamcc::permutation_from_seed(n, seed);
    const auto plain = streamcc::cluster_stream(list.edges, n, k, pi, false);
    const auto halved = streamcc::cluster_stream(list.edges, n, k, pi, true);
    const auto reveal = streamcc::reveal_pivot(g, pi, k);
    const auto cost = streamcc::disagreement_cost(reveal.clustering, g);
    const auto& d = reveal.diagnostics;

    std::vector<std::string> failures;
    if (!(plain.clustering == reveal.clustering)) {
      failures.push_back("streaming != sequential reveal");
    }
    if (!(halved.clustering == plain.clustering)) {
      failures.push_back("halved != default streaming");
    }
    if (cost.total != d.total_cost()) {
      failures.push_back("cost identity broken");
    }
    if (plain.stats.peak_entries > k * n || halved.stats.peak_entries > k * n) {
      failures.push_back("peak entries exceed k*n");
    }
    if (k >= n && !(streamcc::classic_pivot(g, pi) == plain.clustering)) {
      failures.push_back("k >= n but result differs from classic pivot");
    }

    std::cout << "seed " << seed << ": " << (failures.empty() ? "PASS" : "FAIL")
              << " clusters=" << plain.clustering.num_clusters()
              << " singletons=" << plain.clustering.num_singletons()
              << " cost=" << cost.total << " (P+=" << d.p_plus
              << " P-=" << d.p_minus << " S=" << d.singleton_cost() << ")";
    if (k >= n) std::cout << " classic=match";
    std::cout << '\n';
    for (const auto& f : failures) std::cout << "  " << f << '\n';
    if (!failures.empty()) {
      std::cout << "  repro: n=" << n << " k=" << k << " seed=" << seed
                << " edges=" << g.num_edges() << " digest=" << edge_digest(g)
                << '\n';
      status = kExitCheckFailed;
    }
  }
  return status;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind = "planted";
  std::size_t n = 0;
  std::vector<std::size_t> sizes;
  double flip = 0.0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string order = "sorted";
  bool negatives = false;
};

streamcc::InstanceSpec make_spec(const GenArgs& a) {
  streamcc::InstanceSpec spec;
  spec.seed = a.seed;
  if (a.kind == "planted") {
    spec.kind = streamcc::PlantedPartition{a.sizes, a.flip};
  } else if (a.kind == "random") {
    spec.kind = streamcc::RandomPositive{a.n, a.p};
  } else if (a.kind == "clique") {
    spec.kind = streamcc::CompleteClique{a.n};
  } else if (a.kind == "path") {
    spec.kind = streamcc::Path{a.n};
  } else if (a.kind == "star") {
    spec.kind = streamcc::Star{a.n};
  } else if (a.kind == "empty") {
    spec.kind = streamcc::Empty{a.n};
  } else {
    throw UsageError("unknown --kind '" + a.kind + "'");
  }
  return spec;
}

streamcc::StreamOrder parse_order(const std::string& s) {
  if (s == "sorted") return streamcc::StreamOrder::kSorted;
  if (s == "reversed") return streamcc::StreamOrder::kReversed;
  if (s == "shuffled") return streamcc::StreamOrder::kShuffled;
  if (s == "interleaved") return streamcc::StreamOrder::kInterleaved;
  throw UsageError("unknown --order '" + s + "'");
}

std::vector<streamcc::LabeledEdge> generated_stream(
    const GenArgs& a, const streamcc::PositiveGraph& g) {
  return streamcc::emit_stream(
      g, streamcc::EmitOptions{parse_order(a.order), a.seed, a.negatives});
}

int run_gen(const GenArgs& args, const std::string& out_path) {
  const auto g = streamcc::generate(make_spec(args));
  const auto stream = generated_stream(args, g);
  Sink out(out_path, std::cout);
  streamcc::write_edge_list(out.get(), g.size(), stream);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string input;
  GenArgs gen;
  std::vector<std::size_t> k_list{2, 5, 10, 50};
  std::size_t trials = 5;
  std::string summary;
};

int run_bench(const BenchArgs& args) {
  streamcc::EdgeList list;
  if (!args.input.empty()) {
    std::ifstream in = open_input(args.input);
    list = streamcc::read_edge_list(in);
  } else {
    const auto g = streamcc::generate(make_spec(args.gen));
    list.n = g.size();
    list.edges = generated_stream(args.gen, g);
  }
  if (list.n == 0) throw UsageError("instance has no vertices");
  if (args.trials == 0) throw UsageError("--trials must be positive");
  const auto g = streamcc::to_positive_graph(list);
  const std::size_t n = list.n;

  int status = kExitOk;
  ordered_json rows = ordered_json::array();
  std::cout << "k\ttrials\tedges\tingest_ns_per_edge\tfinalize_ms\t"
               "peak_entries\tentry_bound\tmean_cost\tmean_singletons\n";
  for (std::size_t k : args.k_list) {
    if (k < 2) throw UsageError("every --k-list entry must be at least 2");
    streamcc::RunningStats ingest_ns, finalize_ms, cost, singletons;
    std::size_t peak = 0;
    for (std::size_t t = 0; t < args.trials; ++t) {
      const auto res = streamcc::cluster_stream(
          list.edges, n, k, streamcc::derive_seed(args.gen.seed, t));
      const double edges = std::max<double>(1.0, list.edges.size());
      ingest_ns.add(res.stats.stream_seconds * 1e9 / edges);
      finalize_ms.add(res.stats.finalize_seconds * 1e3);
      peak = std::max(peak, res.stats.peak_entries);
      cost.add(static_cast<double>(
          streamcc::disagreement_cost(res.clustering, g).total));
      singletons.add(static_cast<double>(res.clustering.num_singletons()));
    }
    if (peak > k * n) status = kExitCheckFailed;
    std::cout << k << '\t' << args.trials << '\t' << list.edges.size() << '\t'
              << ingest_ns.mean() << '\t' << finalize_ms.mean() << '\t' << peak
              << '\t' << k * n << '\t' << cost.mean() << '\t'
              << singletons.mean() << '\n';
    rows.push_back(ordered_json{{"k", k},
                                {"trials", args.trials},
                                {"edges", list.edges.size()},
                                {"ingest_ns_per_edge", ingest_ns.mean()},
                                {"finalize_ms", finalize_ms.mean()},
                                {"peak_entries", peak},
                                {"entry_bound", k * n},
                                {"mean_cost", cost.mean()},
                                {"cost_std_error", cost.std_error()},
                                {"mean_singletons", singletons.mean()}});
  }

  // Finalize work is O(kn): between consecutive k values the time ratio
  // should stay within twice the k ratio. Reported, not enforced.
  bool linear = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double k0 = rows[i - 1]["k"].get<double>();
    const double k1 = rows[i]["k"].get<double>();
    const double t0 = rows[i - 1]["finalize_ms"].get<double>();
    const double t1 = rows[i]["finalize_ms"].get<double>();
    if (k1 > k0 && t0 > 0 && t1 / t0 > 2.0 * k1 / k0) linear = false;
  }
  ordered_json summary{{"n", n},
                       {"edges", list.edges.size()},
                       {"rows", rows},
                       {"finalize_at_most_linear_in_k", linear},
                       {"peak_within_bound", status == kExitOk}};
  Sink json(args.summary, std::cerr);
  json.get() << summary.dump(2) << '\n';
  return status;
}

void add_gen_flags(CLI::App* cmd, GenArgs& a) {
  cmd->add_option("--kind", a.kind,
                  "planted, random, clique, path, star or empty")
      ->check(CLI::IsMember(
          {"planted", "random", "clique", "path", "star", "empty"}));
  cmd->add_option("--n", a.n, "Vertex count (all kinds but planted)");
  cmd->add_option("--sizes", a.sizes, "Planted cluster sizes")->delimiter(',');
  cmd->add_option("--flip", a.flip, "Planted label flip probability");
  cmd->add_option("--p", a.p, "Random edge probability");
  cmd->add_option("--seed", a.seed, "Instance and shuffle seed")
      ->envname("STREAMCC_SEED");
  cmd->add_option("--order", a.order, "Stream order")
      ->check(CLI::IsMember({"sorted", "reversed", "shuffled", "interleaved"}));
  cmd->add_flag("--negatives", a.negatives, "Also emit negative records");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-streaming correlation clustering"};
  app.require_subcommand(1);

  ClusterArgs cluster;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster an edge stream");
  cluster_cmd->add_option("input", cluster.input, "Edge list path, or - for stdin");
  cluster_cmd->add_option("--n", cluster.n, "Vertex count (required for stdin)");
  cluster_cmd->add_option("--k", cluster.k, "Neighbours kept per vertex (>= 2)")
      ->required();
  cluster_cmd->add_option("--seed", cluster.seed, "Ranking seed")
      ->envname("STREAMCC_SEED");
  cluster_cmd->add_flag("--halved", cluster.halved,
                        "Store only better-ranked neighbours");
  cluster_cmd->add_flag("--order-check", cluster.order_check,
                        "Re-run on the reversed stream and require equality");
  cluster_cmd->add_flag("--cost", cluster.with_cost,
                        "Evaluate the disagreement cost (file input only)");
  cluster_cmd->add_option("--out", cluster.out, "TSV output path (default stdout)");
  cluster_cmd->add_option("--summary", cluster.summary,
                          "JSON summary path (default stderr)");

  std::string eval_clustering, eval_edges;
  auto* eval_cmd = app.add_subcommand("eval", "Disagreement cost of a clustering");
  eval_cmd->add_option("clustering", eval_clustering, "Clustering TSV")->required();
  eval_cmd->add_option("edges", eval_edges, "Edge list")->required();

  std::string compare_edges;
  std::size_t compare_k = 0;
  std::vector<std::uint64_t> compare_seeds;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Check streaming, halved and sequential-reveal runs agree");
  compare_cmd->add_option("edges", compare_edges, "Edge list")->required();
  compare_cmd->add_option("--k", compare_k, "Neighbours kept per vertex")->required();
  compare_cmd->add_option("--seeds", compare_seeds, "Seeds to check (default 0..9)")
      ->delimiter(',');

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time ingest and finalize per k");
  bench_cmd->add_option("input", bench.input, "Edge list (omit to generate)");
  bench_cmd->add_option("--k-list", bench.k_list, "Values of k")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Runs per k");
  bench_cmd->add_option("--summary", bench.summary, "JSON path (default stderr)");
  add_gen_flags(bench_cmd, bench.gen);

  GenArgs gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic instance");
  add_gen_flags(gen_cmd, gen);
  gen_cmd->add_option("--out", gen_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cluster_cmd) return run_cluster(cluster);
    if (*eval_cmd) return run_eval(eval_clustering, eval_edges);
    if (*compare_cmd) return run_compare(compare_edges, compare_k, compare_seeds);
    if (*bench_cmd) return run_bench(bench);
    if (*gen_cmd) return run_gen(gen, gen_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInvariant ? kExitCheckFailed : kExitUsage;
  }
  return kExitUsage;
}
