// cvp-toolkit — command-line driver for the route-analysis library.
//
//   cvp        alternative routes scored from the chain partition
//   partition  dump the chain partition of one query
//   ksp        k shortest simple paths, optionally on the chain-reduced graph
//   diversity  pairwise diversity of a saved route set
//   layers     layer boundaries in a 2-D cost map
//
// Node ids on the command line and in JSON output are 1-based, matching the
// on-disk graph format.  All stdout is deterministic for a given input;
// timing goes to stderr.  Exit codes: 0 success, 1 usage or input error,
// 2 endpoint resolution failure, 3 no route.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvp/cvp.hpp"

namespace {

using cvp::NodeId;

constexpr int kExitUsage = 1;
constexpr int kExitResolve = 2;
constexpr int kExitNoRoute = 3;

struct ToolError : std::runtime_error {
  int code;
  ToolError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
};

// ---------------------------------------------------------------------------
// Shared network options
// ---------------------------------------------------------------------------

struct NetworkOptions {
  std::string graph_path;
  std::string coords_path;
  long long source_id = 0;  // 1-based; 0 = not given
  long long target_id = 0;
  std::vector<double> source_lonlat;
  std::vector<double> target_lonlat;
  bool travel_time = false;
  double units_per_mile = 1.0;
  bool allow_same = false;
};

void add_network_options(CLI::App* cmd, NetworkOptions& o, bool with_endpoints) {
  cmd->add_option("--graph", o.graph_path, "graph file (.gr)")->required();
  cmd->add_option("--coords", o.coords_path, "coordinate file (.co)");
  cmd->add_flag("--travel-time", o.travel_time,
                "convert distance weights to hours using per-edge road categories");
  cmd->add_option("--units-per-mile", o.units_per_mile,
                  "distance units per mile for --travel-time (default 1)")
      ->check(CLI::PositiveNumber);
  if (!with_endpoints) return;
  auto* src = cmd->add_option("--source", o.source_id, "source node id (1-based)");
  auto* dst = cmd->add_option("--target", o.target_id, "target node id (1-based)");
  auto* src_ll = cmd->add_option("--source-lonlat", o.source_lonlat,
                                 "source as 'lon lat', snapped to the nearest node")
                     ->expected(2);
  auto* dst_ll = cmd->add_option("--target-lonlat", o.target_lonlat,
                                 "target as 'lon lat', snapped to the nearest node")
                     ->expected(2);
  src->excludes(src_ll);
  dst->excludes(dst_ll);
  cmd->add_flag("--allow-same", o.allow_same, "permit source == target");
}

cvp::ParsedNetwork load_network(const NetworkOptions& o) {
  std::ifstream gr(o.graph_path);
  if (!gr) throw ToolError(kExitUsage, "cannot open graph " + o.graph_path);
  std::optional<std::ifstream> co;
  if (!o.coords_path.empty()) {
    co.emplace(o.coords_path);
    if (!*co) throw ToolError(kExitUsage, "cannot open coordinates " + o.coords_path);
  }
  cvp::ParsedNetwork net = cvp::parse_dimacs(gr, co ? &*co : nullptr);
  if (o.travel_time)
    net.graph = cvp::apply_speed_model(net.graph, cvp::default_speed_table(),
                                       1.0 / o.units_per_mile);
  return net;
}

NodeId resolve_one(const cvp::ParsedNetwork& net, long long id,
                   const std::vector<double>& lonlat, const char* side) {
  if (!lonlat.empty()) {
    if (!net.geometry)
      throw ToolError(kExitUsage, std::string("--") + side + "-lonlat requires --coords");
    return cvp::resolve_endpoint(*net.geometry, lonlat[0], lonlat[1]);
  }
  if (id < 1) throw ToolError(kExitUsage, std::string("missing --") + side);
  if (static_cast<std::size_t>(id) > net.graph.node_count())
    throw ToolError(kExitResolve, std::string(side) + " id " + std::to_string(id) +
                                      " exceeds node count " +
                                      std::to_string(net.graph.node_count()));
  return static_cast<NodeId>(id - 1);
}

std::pair<NodeId, NodeId> resolve_endpoints(const cvp::ParsedNetwork& net,
                                            const NetworkOptions& o) {
  NodeId s = resolve_one(net, o.source_id, o.source_lonlat, "source");
  NodeId t = resolve_one(net, o.target_id, o.target_lonlat, "target");
  if (s == t && !o.allow_same)
    throw ToolError(kExitResolve,
                    "source and target resolve to the same node " + std::to_string(s + 1) +
                        " (pass --allow-same to accept)");
  return {s, t};
}

std::vector<NodeId> external_ids(const std::vector<NodeId>& nodes) {
  std::vector<NodeId> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(v + 1);
  return out;
}

// ---------------------------------------------------------------------------
// cvp subcommand
// ---------------------------------------------------------------------------

struct CvpOptions {
  std::size_t k = 5;
  cvp::Measure measure = cvp::Measure::cost;
  bool use_thresholds = false;
  double max_cost_ratio = 1.33;
  double min_rho = 0.175;
  std::string format = "json";
  std::string batch_path;
  unsigned jobs = 1;
};

std::string run_cvp_query(const cvp::ParsedNetwork& net, NodeId s, NodeId t,
                          const CvpOptions& o) {
  const cvp::Graph& g = net.graph;
  auto beta = cvp::compute_spt(g, s, cvp::Orientation::predecessor);
  auto phi = cvp::compute_spt(g, t, cvp::Orientation::successor);
  if (!beta.reachable(t))
    throw ToolError(kExitNoRoute, "no route from " + std::to_string(s + 1) + " to " +
                                      std::to_string(t + 1));

  cvp::Partition partition = cvp::partition_rpc(beta, phi, s, t);
  std::vector<cvp::CvpRecord> records = cvp::score_chains(partition, beta, phi);
  std::vector<cvp::CvpRecord> picked =
      o.use_thresholds ? cvp::select_by_thresholds(records, o.max_cost_ratio, o.min_rho, o.k)
                       : cvp::rank(records, o.measure, o.k);
  std::erase_if(picked, [](const cvp::CvpRecord& r) { return r.cost == cvp::kInfCost; });

  std::vector<cvp::ExplicitPath> routes;
  routes.reserve(picked.size());
  for (const cvp::CvpRecord& r : picked)
    routes.push_back(cvp::extract_cvp(partition.chains[r.chain_index], beta, phi, s, t));

  if (o.format == "geojson") {
    if (!net.geometry) throw ToolError(kExitUsage, "--format geojson requires --coords");
    return cvp::paths_to_geojson(routes, picked, *net.geometry);
  }

  std::ostringstream os;
  os << "{\"source\":" << s + 1 << ",\"target\":" << t + 1
     << ",\"shortest_cost\":" << cvp::json_number(beta.dist[t])
     << ",\"chain_count\":" << partition.size() << ",\"routes\":[";
  for (std::size_t i = 0; i < routes.size(); ++i) {
    if (i) os << ",";
    cvp::ExplicitPath shifted{external_ids(routes[i].nodes), routes[i].cost};
    os << cvp::path_to_json(shifted, picked[i]);
  }
  os << "]}";
  return os.str();
}

int run_cvp_batch(const cvp::ParsedNetwork& net, const NetworkOptions& netopt,
                  const CvpOptions& o) {
  std::ifstream in(o.batch_path);
  if (!in) throw ToolError(kExitUsage, "cannot open batch file " + o.batch_path);

  std::vector<std::pair<long long, long long>> queries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    if (!(ls >> a >> b))
      throw ToolError(kExitUsage,
                      "batch line " + std::to_string(lineno) + " is not 'source target'");
    queries.push_back({a, b});
  }

  std::vector<std::string> results(queries.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (std::size_t i; (i = cursor.fetch_add(1)) < queries.size();) {
      NetworkOptions q = netopt;
      q.source_id = queries[i].first;
      q.target_id = queries[i].second;
      q.source_lonlat.clear();
      q.target_lonlat.clear();
      try {
        auto [s, t] = resolve_endpoints(net, q);
        results[i] = run_cvp_query(net, s, t, o);
      } catch (const std::exception& e) {
        results[i] = "{\"source\":" + std::to_string(queries[i].first) +
                     ",\"target\":" + std::to_string(queries[i].second) + ",\"error\":" +
                     cvp::json_string(e.what()) + "}";
      }
    }
  };
  unsigned n = std::min<std::size_t>(o.jobs, queries.size() ? queries.size() : 1);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i + 1 < n; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  for (const std::string& r : results) std::cout << r << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// Remaining subcommands
// ---------------------------------------------------------------------------

int run_partition_cmd(const cvp::ParsedNetwork& net, const NetworkOptions& o) {
  auto [s, t] = resolve_endpoints(net, o);
  auto beta = cvp::compute_spt(net.graph, s, cvp::Orientation::predecessor);
  auto phi = cvp::compute_spt(net.graph, t, cvp::Orientation::successor);
  cvp::Partition p = cvp::partition_rpc(beta, phi, s, t);
  for (cvp::RpcChain& c : p.chains)
    for (NodeId& v : c.nodes) ++v;  // report 1-based ids
  std::string body = cvp::partition_to_json(p);
  std::cout << "{\"source\":" << s + 1 << ",\"target\":" << t + 1 << "," << body.substr(1)
            << "\n";
  return 0;
}

int run_ksp_cmd(const cvp::ParsedNetwork& net, const NetworkOptions& o, std::size_t k,
                bool reduce) {
  auto [s, t] = resolve_endpoints(net, o);
  auto start = std::chrono::steady_clock::now();
  std::vector<cvp::ExplicitPath> paths = reduce ? cvp::accelerated_ksp(net.graph, s, t, k)
                                                : cvp::yen_ksp(net.graph, s, t, k);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                  .count();
  std::fprintf(stderr, "elapsed_ms=%.3f\n", ms);
  if (paths.empty())
    throw ToolError(kExitNoRoute, "no route from " + std::to_string(s + 1) + " to " +
                                      std::to_string(t + 1));

  std::cout << "{\"source\":" << s + 1 << ",\"target\":" << t + 1 << ",\"k\":" << k
            << ",\"reduced\":" << (reduce ? "true" : "false") << ",\"paths\":[";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) std::cout << ",";
    cvp::ExplicitPath shifted{external_ids(paths[i].nodes), paths[i].cost};
    std::cout << cvp::path_to_json(shifted);
  }
  std::cout << "]}\n";
  return 0;
}

int run_diversity_cmd(const std::string& paths_file) {
  std::optional<std::ifstream> file;
  std::istream* in = &std::cin;
  if (paths_file != "-") {
    file.emplace(paths_file);
    if (!*file) throw ToolError(kExitUsage, "cannot open " + paths_file);
    in = &*file;
  }
  nlohmann::json doc;
  try {
    *in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ToolError(kExitUsage, std::string("cannot parse route set: ") + e.what());
  }

  const nlohmann::json* arr = nullptr;
  if (doc.is_array()) arr = &doc;
  else if (doc.contains("paths")) arr = &doc["paths"];
  else if (doc.contains("routes")) arr = &doc["routes"];
  if (arr == nullptr || !arr->is_array())
    throw ToolError(kExitUsage, "route set must be an array or hold 'paths' or 'routes'");

  std::vector<cvp::ExplicitPath> paths;
  try {
    for (const nlohmann::json& item : *arr) {
      cvp::ExplicitPath p;
      for (const nlohmann::json& v : item.at("nodes")) p.nodes.push_back(v.get<NodeId>());
      p.cost = item.value("cost", 0.0);
      paths.push_back(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ToolError(kExitUsage, std::string("malformed route entry: ") + e.what());
  }
  if (paths.size() < 2) throw ToolError(kExitUsage, "diversity needs at least two routes");

  std::cout << "{\"count\":" << paths.size()
            << ",\"mean_jaccard\":" << cvp::json_number(cvp::diversity(paths)) << ",\"pairs\":[";
  bool first = true;
  for (std::size_t i = 0; i < paths.size(); ++i)
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!first) std::cout << ",";
      first = false;
      std::cout << "{\"a\":" << i + 1 << ",\"b\":" << j + 1 << ",\"jaccard\":"
                << cvp::json_number(cvp::jaccard_distance(paths[i].nodes, paths[j].nodes))
                << "}";
    }
  std::cout << "]}\n";
  return 0;
}

struct LayersOptions {
  std::string map_path;
  cvp::TrellisParams params;
  std::string threshold_mode = "mean";
  std::string format = "json";
  int cell = 8;
};

int run_layers_cmd(const LayersOptions& o) {
  cvp::TrellisParams params = o.params;
  params.threshold_mode =
      o.threshold_mode == "total" ? cvp::ThresholdMode::total : cvp::ThresholdMode::mean;
  cvp::CostMap map;
  try {
    map = cvp::read_costmap_file(o.map_path);
  } catch (const std::exception& e) {
    throw ToolError(kExitUsage, e.what());
  }
  std::vector<cvp::Boundary> layers = cvp::detect_layers(map, params);
  if (o.format == "svg")
    std::cout << cvp::boundaries_to_svg(map, layers, o.cell);
  else
    std::cout << cvp::boundaries_to_json(layers) << "\n";
  return 0;
}

// Hidden cross-check: exhaustive k shortest paths on small graphs.
int run_oracle_cmd(const cvp::ParsedNetwork& net, const NetworkOptions& o, std::size_t k,
                   std::size_t max_nodes) {
  auto [s, t] = resolve_endpoints(net, o);
  cvp::EnumerationBudget budget;
  budget.max_nodes = max_nodes;
  auto paths = cvp::brute_force_ksp(net.graph, s, t, k, budget);
  std::cout << "{\"paths\":[";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) std::cout << ",";
    cvp::ExplicitPath shifted{external_ids(paths[i].nodes), paths[i].cost};
    std::cout << cvp::path_to_json(shifted);
  }
  std::cout << "]}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"route alternatives, chain partitions and layer detection"};
  app.require_subcommand(1);

  NetworkOptions cvp_net;
  CvpOptions cvp_opt;
  CLI::App* cvp_cmd = app.add_subcommand("cvp", "alternative routes from the chain partition");
  add_network_options(cvp_cmd, cvp_net, true);
  cvp_cmd->add_option("--k", cvp_opt.k, "maximum routes to report (default 5)");
  cvp_cmd->add_option("--measure", cvp_opt.measure, "ranking measure (default cost)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cvp::Measure>{{"cost", cvp::Measure::cost},
                                              {"omega", cvp::Measure::omega},
                                              {"rho", cvp::Measure::rho}}));
  CLI::Option* ratio_opt =
      cvp_cmd->add_option("--max-cost-ratio", cvp_opt.max_cost_ratio,
                          "alternative-route filter: admissible cost over the optimum "
                          "(default 1.33; enables threshold selection)");
  CLI::Option* rho_opt =
      cvp_cmd->add_option("--min-rho", cvp_opt.min_rho,
                          "alternative-route filter: minimum chain cost share "
                          "(default 0.175; enables threshold selection)");
  cvp_cmd->add_option("--format", cvp_opt.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "geojson"}));
  CLI::Option* batch_opt = cvp_cmd->add_option(
      "--batch", cvp_opt.batch_path, "file of 'source target' lines; one JSON result per line");
  cvp_cmd->add_option("--jobs", cvp_opt.jobs, "worker threads for --batch (default 1)")
      ->check(CLI::PositiveNumber);
  batch_opt->excludes("--source")->excludes("--target");
  batch_opt->excludes("--source-lonlat")->excludes("--target-lonlat");

  NetworkOptions part_net;
  CLI::App* part_cmd = app.add_subcommand("partition", "dump the chain partition");
  add_network_options(part_cmd, part_net, true);

  NetworkOptions ksp_net;
  std::size_t ksp_k = 5;
  bool ksp_reduce = false;
  CLI::App* ksp_cmd = app.add_subcommand("ksp", "k shortest simple paths");
  add_network_options(ksp_cmd, ksp_net, true);
  ksp_cmd->add_option("--k", ksp_k, "number of paths (default 5)");
  ksp_cmd->add_flag("--reduce", ksp_reduce, "search the chain-reduced subgraph");

  std::string div_file = "-";
  CLI::App* div_cmd = app.add_subcommand("diversity", "pairwise diversity of a route set");
  div_cmd->add_option("--paths", div_file, "JSON route set, or - for stdin");

  LayersOptions lay;
  CLI::App* lay_cmd = app.add_subcommand("layers", "layer boundaries in a cost map");
  lay_cmd->add_option("--map", lay.map_path, "cost map (.csv or .pgm)")->required();
  lay_cmd->add_option("--window", lay.params.window, "max row step per column (default 2)");
  lay_cmd->add_option("--sigma", lay.params.sigma, "orientation penalty std-dev (default 1)");
  lay_cmd->add_option("--alpha", lay.params.alpha, "evidence weight (default 1)");
  lay_cmd->add_option("--tau", lay.params.tau, "chain cost threshold (default 0.5)");
  lay_cmd->add_option("--min-chain-len", lay.params.min_chain_len,
                      "minimum boundary length in pixels (default 3)");
  lay_cmd->add_option("--threshold-mode", lay.threshold_mode,
                      "apply tau to 'mean' or 'total' chain cost (default mean)")
      ->check(CLI::IsMember({"mean", "total"}));
  lay_cmd->add_option("--format", lay.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "svg"}));
  lay_cmd->add_option("--cell", lay.cell, "svg cell size in px (default 8)")
      ->check(CLI::PositiveNumber);

  NetworkOptions ora_net;
  std::size_t ora_k = 5, ora_max_nodes = 12;
  CLI::App* ora_cmd = app.add_subcommand("oracle", "exhaustive reference search");
  ora_cmd->group("");  // internal; hidden from help
  add_network_options(ora_cmd, ora_net, true);
  ora_cmd->add_option("--k", ora_k, "number of paths");
  ora_cmd->add_option("--max-nodes", ora_max_nodes, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cvp_cmd->parsed()) {
      cvp_opt.use_thresholds = ratio_opt->count() > 0 || rho_opt->count() > 0;
      cvp::ParsedNetwork net = load_network(cvp_net);
      if (!cvp_opt.batch_path.empty()) return run_cvp_batch(net, cvp_net, cvp_opt);
      auto [s, t] = resolve_endpoints(net, cvp_net);
      std::cout << run_cvp_query(net, s, t, cvp_opt) << "\n";
      return 0;
    }
    if (part_cmd->parsed()) return run_partition_cmd(load_network(part_net), part_net);
    if (ksp_cmd->parsed()) return run_ksp_cmd(load_network(ksp_net), ksp_net, ksp_k, ksp_reduce);
    if (div_cmd->parsed()) return run_diversity_cmd(div_file);
    if (lay_cmd->parsed()) return run_layers_cmd(lay);
    if (ora_cmd->parsed())
      return run_oracle_cmd(load_network(ora_net), ora_net, ora_k, ora_max_nodes);
  } catch (const ToolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const cvp::DimacsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
