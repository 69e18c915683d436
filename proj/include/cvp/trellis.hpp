#pragma once
// Layer-boundary detection in 2-D cost maps (e.g. radar profiles) via
// reciprocal-pointer chains on a trellis graph.
//
// The trellis has one node per pixel plus virtual endpoints: s fans out to
// column 0 and the last column fans in to t, both at zero cost.  A pixel
// (i, r) connects to (i+1, r') whenever |r' - r| <= w, at cost
//
//     alpha * (1 - evidence(i+1, r'))  +  (r' - r)^2 / (2 sigma^2)
//
// i.e. strong evidence at the head pixel is cheap and steep row jumps pay a
// Gaussian orientation penalty.  Evidence is the min-max normalized map.
//
// A boundary is a chain (not a whole route: the zero-cost virtual fan-in
// would otherwise force every candidate to span all columns) that is long
// enough and cheap enough per edge.  Chains inherit node-disjointness from
// the partition, so distinct boundaries never cross.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cvp/graph.hpp"
#include "cvp/partition.hpp"
#include "cvp/ranking.hpp"
#include "cvp/spt.hpp"

namespace cvp {

struct CostMap {
  std::size_t rows = 0, cols = 0;
  std::vector<double> values;  // row-major: values[r * cols + c]

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
};

enum class ThresholdMode { mean, total };

struct TrellisParams {
  std::int32_t window = 2;      // max row step between adjacent columns
  double sigma = 1.0;           // row-units std-dev of the orientation penalty
  double alpha = 1.0;           // evidence weight
  double tau = 0.5;             // chain cost threshold (per threshold_mode)
  std::size_t min_chain_len = 3;  // minimum pixel count for a boundary
  ThresholdMode threshold_mode = ThresholdMode::mean;

  void validate() const {
    if (window < 0) throw std::invalid_argument("window must be >= 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
    if (alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    if (min_chain_len < 2) throw std::invalid_argument("min_chain_len must be >= 2");
  }
};

struct Boundary {
  std::vector<std::pair<std::int32_t, std::int32_t>> points;  // (col, row), col ascending
  double mean_edge_cost = 0.0;
  double total_cost = 0.0;
};

struct Trellis {
  Graph graph;
  std::size_t rows = 0, cols = 0;
  NodeId s = kNoNode, t = kNoNode;

  NodeId pixel(std::size_t col, std::size_t row) const {
    return static_cast<NodeId>(col * rows + row);
  }
  bool is_pixel(NodeId v) const { return v < rows * cols; }
  std::int32_t col_of(NodeId v) const { return static_cast<std::int32_t>(v / rows); }
  std::int32_t row_of(NodeId v) const { return static_cast<std::int32_t>(v % rows); }
};

// Min-max normalization; a constant map normalizes to all zeros (no pixel
// carries evidence over any other).
inline std::vector<double> normalized_evidence(const CostMap& map) {
  double lo = map.values.empty() ? 0.0 : *std::min_element(map.values.begin(), map.values.end());
  double hi = map.values.empty() ? 0.0 : *std::max_element(map.values.begin(), map.values.end());
  std::vector<double> ev(map.values.size(), 0.0);
  if (hi > lo)
    for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = (map.values[i] - lo) / (hi - lo);
  return ev;
}

inline Trellis build_trellis(const CostMap& map, const TrellisParams& params) {
  params.validate();
  if (map.rows == 0 || map.cols == 0) throw std::invalid_argument("empty cost map");
  if (map.values.size() != map.rows * map.cols)
    throw std::invalid_argument("cost map size mismatch");

  Trellis tr;
  tr.rows = map.rows;
  tr.cols = map.cols;
  const std::size_t pixels = map.rows * map.cols;
  tr.s = static_cast<NodeId>(pixels);
  tr.t = static_cast<NodeId>(pixels + 1);

  std::vector<double> ev = normalized_evidence(map);
  auto evidence = [&](std::size_t col, std::size_t row) { return ev[row * map.cols + col]; };

  std::vector<Edge> edges;
  for (std::size_t r = 0; r < map.rows; ++r) edges.push_back({tr.s, tr.pixel(0, r), 0.0, -1});
  const double inv2s2 = 1.0 / (2.0 * params.sigma * params.sigma);
  for (std::size_t c = 0; c + 1 < map.cols; ++c)
    for (std::size_t r = 0; r < map.rows; ++r)
      for (std::int32_t dr = -params.window; dr <= params.window; ++dr) {
        std::int64_t r2 = static_cast<std::int64_t>(r) + dr;
        if (r2 < 0 || r2 >= static_cast<std::int64_t>(map.rows)) continue;
        double cost = params.alpha * (1.0 - evidence(c + 1, static_cast<std::size_t>(r2))) +
                      static_cast<double>(dr) * static_cast<double>(dr) * inv2s2;
        edges.push_back({tr.pixel(c, r), tr.pixel(c + 1, static_cast<std::size_t>(r2)), cost, -1});
      }
  for (std::size_t r = 0; r < map.rows; ++r)
    edges.push_back({tr.pixel(map.cols - 1, r), tr.t, 0.0, -1});

  tr.graph = Graph(pixels + 2, std::move(edges));
  return tr;
}

// Chains of the trellis partition, trimmed of virtual endpoints, kept when
// long enough and under the cost threshold.  Edge costs inside a chain are
// read off the predecessor tree (consecutive chain nodes are tree-linked).
inline std::vector<Boundary> detect_layers(const CostMap& map, const TrellisParams& params) {
  Trellis tr = build_trellis(map, params);
  ShortestPathTree beta = compute_spt(tr.graph, tr.s, Orientation::predecessor);
  ShortestPathTree phi = compute_spt(tr.graph, tr.t, Orientation::successor);
  Partition partition = partition_rpc(beta, phi, tr.s, tr.t);

  std::vector<Boundary> out;
  for (const RpcChain& chain : partition.chains) {
    std::size_t lo = 0, hi = chain.nodes.size();
    while (lo < hi && !tr.is_pixel(chain.nodes[lo])) ++lo;
    while (hi > lo && !tr.is_pixel(chain.nodes[hi - 1])) --hi;
    if (hi - lo < params.min_chain_len) continue;

    Boundary b;
    for (std::size_t i = lo; i < hi; ++i) {
      NodeId v = chain.nodes[i];
      b.points.push_back({tr.col_of(v), tr.row_of(v)});
      if (i > lo) b.total_cost += beta.dist[v] - beta.dist[chain.nodes[i - 1]];
    }
    b.mean_edge_cost = b.total_cost / static_cast<double>(b.points.size() - 1);
    double key = params.threshold_mode == ThresholdMode::mean ? b.mean_edge_cost : b.total_cost;
    if (key <= params.tau) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Boundary& a, const Boundary& b) {
    if (a.points.front().second != b.points.front().second)
      return a.points.front().second < b.points.front().second;  // top-most first
    return a.points.front().first < b.points.front().first;
  });
  return out;
}

// True iff no two boundaries interleave rows anywhere on shared columns:
// over every shared column range one stays strictly above the other.
inline bool check_non_crossing(const std::vector<Boundary>& boundaries) {
  auto row_at = [](const Boundary& b, std::int32_t col) -> std::int32_t {
    for (const auto& [c, r] : b.points)
      if (c == col) return r;
    return -1;
  };
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    for (std::size_t j = i + 1; j < boundaries.size(); ++j) {
      int sign = 0;
      std::int32_t lo = std::max(boundaries[i].points.front().first,
                                 boundaries[j].points.front().first);
      std::int32_t hi = std::min(boundaries[i].points.back().first,
                                 boundaries[j].points.back().first);
      for (std::int32_t c = lo; c <= hi; ++c) {
        std::int32_t ri = row_at(boundaries[i], c), rj = row_at(boundaries[j], c);
        if (ri < 0 || rj < 0) continue;
        int here = ri < rj ? -1 : (ri > rj ? 1 : 0);
        if (here == 0) return false;  // impossible for disjoint chains; defensive
        if (sign == 0) sign = here;
        else if (sign != here) return false;
      }
    }
  return true;
}

// ---------------------------------------------------------------------------
// Cost map input: CSV (rows of comma-separated reals) and PGM (P2/P5)
// ---------------------------------------------------------------------------

inline CostMap read_costmap_csv(std::istream& in) {
  CostMap map;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(row, cell, ',')) {
      try {
        map.values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("malformed CSV cell '" + cell + "' in row " +
                                 std::to_string(map.rows + 1));
      }
      ++count;
    }
    if (map.rows == 0)
      map.cols = count;
    else if (count != map.cols)
      throw std::runtime_error("ragged CSV: row " + std::to_string(map.rows + 1) + " has " +
                               std::to_string(count) + " cells, expected " +
                               std::to_string(map.cols));
    ++map.rows;
  }
  if (map.rows == 0) throw std::runtime_error("empty cost map");
  return map;
}

inline CostMap read_costmap_pgm(std::istream& in) {
  auto next_token = [&in]() -> std::string {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw std::runtime_error("truncated PGM header");
  };
  std::string magic = next_token();
  if (magic != "P2" && magic != "P5") throw std::runtime_error("unsupported PGM magic " + magic);
  std::size_t w = std::stoul(next_token());
  std::size_t h = std::stoul(next_token());
  double maxval = std::stod(next_token());
  if (w == 0 || h == 0 || maxval <= 0) throw std::runtime_error("malformed PGM dimensions");

  CostMap map;
  map.rows = h;
  map.cols = w;
  map.values.reserve(w * h);
  if (magic == "P2") {
    for (std::size_t i = 0; i < w * h; ++i) map.values.push_back(std::stod(next_token()) / maxval);
  } else {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> buf(w * h);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() != static_cast<std::streamsize>(buf.size()))
      throw std::runtime_error("truncated PGM pixel data");
    for (unsigned char px : buf) map.values.push_back(px / maxval);
  }
  return map;
}

inline CostMap read_costmap_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open cost map " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".pgm") return read_costmap_pgm(f);
  return read_costmap_csv(f);
}

}  // namespace cvp
