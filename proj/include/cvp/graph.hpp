#pragma once
// Directed weighted graph with dense 0-based node ids, CSR-style adjacency
// in both directions, optional per-node coordinates and per-edge road
// categories.  Immutable after construction; concurrent reads are safe.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cvp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
constexpr double kInfCost = std::numeric_limits<double>::infinity();

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  double cost = 0.0;
  // Road type code (e.g. 11..48); -1 when the edge carries no category.
  std::int32_t category = -1;
};

// Per-node (lon, lat) pairs; either present for every node or absent.
struct NodeGeometry {
  std::vector<std::pair<double, double>> lonlat;

  std::size_t size() const { return lonlat.size(); }
  double lon(NodeId v) const { return lonlat[v].first; }
  double lat(NodeId v) const { return lonlat[v].second; }
};

class Graph {
 public:
  Graph() = default;

  Graph(std::size_t node_count, std::vector<Edge> edges)
      : node_count_(node_count), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.from >= node_count_ || e.to >= node_count_)
        throw GraphError("edge " + std::to_string(i) + " references node out of range");
      if (!(e.cost >= 0.0))
        throw GraphError("edge " + std::to_string(i) + " has negative or NaN cost");
    }
    build_index(out_offsets_, out_list_, /*by_from=*/true);
    build_index(in_offsets_, in_list_, /*by_from=*/false);
  }

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Edge ids leaving / entering v, in insertion order.
  std::span<const EdgeId> out_edges(NodeId v) const {
    return {out_list_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const EdgeId> in_edges(NodeId v) const {
    return {in_list_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  // Cheapest direct edge cost u -> v, or +infinity when absent.
  double min_edge_cost(NodeId u, NodeId v) const {
    double best = kInfCost;
    for (EdgeId e : out_edges(u))
      if (edges_[e].to == v && edges_[e].cost < best) best = edges_[e].cost;
    return best;
  }

  bool has_edge(NodeId u, NodeId v) const { return min_edge_cost(u, v) < kInfCost; }

 private:
  void build_index(std::vector<std::size_t>& offsets, std::vector<EdgeId>& list, bool by_from) {
    offsets.assign(node_count_ + 1, 0);
    for (const Edge& e : edges_) ++offsets[(by_from ? e.from : e.to) + 1];
    for (std::size_t v = 0; v < node_count_; ++v) offsets[v + 1] += offsets[v];
    list.resize(edges_.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      NodeId key = by_from ? edges_[e].from : edges_[e].to;
      list[cursor[key]++] = e;
    }
  }

  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_, in_offsets_;
  std::vector<EdgeId> out_list_, in_list_;
};

// Reverses every edge; weights and categories are preserved.
inline Graph transpose(const Graph& g) {
  std::vector<Edge> rev;
  rev.reserve(g.edge_count());
  for (const Edge& e : g.edges()) rev.push_back({e.to, e.from, e.cost, e.category});
  return Graph(g.node_count(), std::move(rev));
}

// ---------------------------------------------------------------------------
// Road-category speed model
// ---------------------------------------------------------------------------

// Inclusive category ranges mapped to speeds (mph).
struct SpeedTable {
  struct Band {
    std::int32_t lo, hi;
    double mph;
  };
  std::vector<Band> bands;

  std::optional<double> lookup(std::int32_t category) const {
    for (const Band& b : bands)
      if (category >= b.lo && category <= b.hi) return b.mph;
    return std::nullopt;
  }
};

// Limited-access 70, other divided 60, primary 55, secondary 37.5, local 22.5.
inline SpeedTable default_speed_table() {
  return SpeedTable{{{11, 15, 70.0},
                     {25, 25, 60.0},
                     {21, 24, 55.0},
                     {31, 35, 37.5},
                     {38, 38, 37.5},
                     {41, 48, 22.5}}};
}

// Converts distance weights to travel times: hours = miles / mph.
// `miles_per_unit` rescales weights whose unit is not already miles.
// Every edge must carry a category covered by the table.
inline Graph apply_speed_model(const Graph& g, const SpeedTable& table,
                               double miles_per_unit = 1.0) {
  std::vector<Edge> timed;
  timed.reserve(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeId>(i));
    if (e.category < 0)
      throw GraphError("edge " + std::to_string(i) + " has no road category");
    std::optional<double> mph = table.lookup(e.category);
    if (!mph)
      throw GraphError("edge " + std::to_string(i) + " has unknown road category " +
                       std::to_string(e.category));
    timed.push_back({e.from, e.to, e.cost * miles_per_unit / *mph, e.category});
  }
  return Graph(g.node_count(), std::move(timed));
}

// Nearest node to (lon, lat) by squared Euclidean distance; ties go to the
// lower node id.
inline NodeId resolve_endpoint(const NodeGeometry& geom, double lon, double lat) {
  if (geom.size() == 0) throw GraphError("cannot resolve endpoint: no coordinates");
  NodeId best = 0;
  double best_d2 = kInfCost;
  for (NodeId v = 0; v < geom.size(); ++v) {
    double dx = geom.lon(v) - lon, dy = geom.lat(v) - lat;
    double d2 = dx * dx + dy * dy;
    if (d2 < best_d2) {
      best_d2 = d2;
      best = v;
    }
  }
  return best;
}

}  // namespace cvp
