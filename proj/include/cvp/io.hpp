#pragma once
// Deterministic serialization.  All JSON is emitted with fixed key order and
// floats at 9 significant digits, so identical inputs produce byte-identical
// output; infinities become null.

#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cvp/graph.hpp"
#include "cvp/partition.hpp"
#include "cvp/ranking.hpp"
#include "cvp/spt.hpp"
#include "cvp/trellis.hpp"

namespace cvp {

inline std::string json_number(double v) {
  if (v != v) return "null";
  if (v == kInfCost || v == -kInfCost) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out + "\"";
}

inline std::string json_nodes(const std::vector<NodeId>& nodes) {
  std::string out = "[";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(nodes[i]);
  }
  return out + "]";
}

inline std::string graph_to_json(const Graph& g) {
  std::ostringstream os;
  os << "{\"nodes\":" << g.node_count() << ",\"edges\":[";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(static_cast<EdgeId>(i));
    if (i) os << ",";
    os << "[" << e.from << "," << e.to << "," << json_number(e.cost) << "]";
  }
  os << "]}";
  return os.str();
}

inline std::string tree_to_json(const ShortestPathTree& t) {
  std::ostringstream os;
  os << "{\"orientation\":"
     << (t.orientation == Orientation::predecessor ? "\"predecessor\"" : "\"successor\"")
     << ",\"root\":" << t.root << ",\"nodes\":[";
  for (std::size_t v = 0; v < t.parent.size(); ++v) {
    if (v) os << ",";
    os << "{\"parent\":";
    if (t.parent[v] == kNoNode) os << "null";
    else os << t.parent[v];
    os << ",\"dist\":" << json_number(t.dist[v]) << ",\"hops\":";
    if (t.hops[v] < 0) os << "null";
    else os << t.hops[v];
    os << "}";
  }
  os << "]}";
  return os.str();
}

inline std::string partition_to_json(const Partition& p, bool include_chains = true) {
  std::ostringstream os;
  os << "{\"chain_count\":" << p.size();
  std::vector<std::size_t> histogram;  // histogram[len] = number of chains of that length
  for (const RpcChain& c : p.chains) {
    if (c.nodes.size() >= histogram.size()) histogram.resize(c.nodes.size() + 1, 0);
    ++histogram[c.nodes.size()];
  }
  os << ",\"size_histogram\":{";
  bool first = true;
  for (std::size_t len = 0; len < histogram.size(); ++len)
    if (histogram[len]) {
      if (!first) os << ",";
      first = false;
      os << "\"" << len << "\":" << histogram[len];
    }
  os << "}";
  if (include_chains) {
    os << ",\"chains\":[";
    for (std::size_t i = 0; i < p.chains.size(); ++i) {
      if (i) os << ",";
      os << json_nodes(p.chains[i].nodes);
    }
    os << "]";
  }
  os << "}";
  return os.str();
}

inline std::string path_to_json(const ExplicitPath& path, const CvpRecord& r) {
  std::ostringstream os;
  os << "{\"nodes\":" << json_nodes(path.nodes) << ",\"cost\":" << json_number(path.cost)
     << ",\"omega\":" << json_number(r.omega) << ",\"rho\":" << json_number(r.rho) << "}";
  return os.str();
}

inline std::string path_to_json(const ExplicitPath& path) {
  std::ostringstream os;
  os << "{\"nodes\":" << json_nodes(path.nodes) << ",\"cost\":" << json_number(path.cost) << "}";
  return os.str();
}

inline std::string paths_to_geojson(const std::vector<ExplicitPath>& paths,
                                    const std::vector<CvpRecord>& records,
                                    const NodeGeometry& geom) {
  std::ostringstream os;
  os << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) os << ",";
    os << "{\"type\":\"Feature\",\"properties\":{\"rank\":" << i + 1
       << ",\"cost\":" << json_number(paths[i].cost);
    if (i < records.size())
      os << ",\"omega\":" << json_number(records[i].omega)
         << ",\"rho\":" << json_number(records[i].rho);
    os << "},\"geometry\":{\"type\":\"LineString\",\"coordinates\":[";
    for (std::size_t j = 0; j < paths[i].nodes.size(); ++j) {
      if (j) os << ",";
      NodeId v = paths[i].nodes[j];
      os << "[" << json_number(geom.lon(v)) << "," << json_number(geom.lat(v)) << "]";
    }
    os << "]}}";
  }
  os << "]}";
  return os.str();
}

inline std::string boundaries_to_json(const std::vector<Boundary>& boundaries) {
  std::ostringstream os;
  os << "{\"boundaries\":[";
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (i) os << ",";
    os << "{\"points\":[";
    for (std::size_t j = 0; j < boundaries[i].points.size(); ++j) {
      if (j) os << ",";
      os << "[" << boundaries[i].points[j].first << "," << boundaries[i].points[j].second << "]";
    }
    os << "],\"mean_edge_cost\":" << json_number(boundaries[i].mean_edge_cost)
       << ",\"total_cost\":" << json_number(boundaries[i].total_cost) << "}";
  }
  os << "]}";
  return os.str();
}

// Grayscale cell raster with boundary polylines, for eyeballing detections.
inline std::string boundaries_to_svg(const CostMap& map,
                                     const std::vector<Boundary>& boundaries,
                                     int cell = 8) {
  std::vector<double> ev = normalized_evidence(map);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << map.cols * cell << "\" height=\""
     << map.rows * cell << "\">\n";
  for (std::size_t r = 0; r < map.rows; ++r)
    for (std::size_t c = 0; c < map.cols; ++c) {
      int shade = static_cast<int>(ev[r * map.cols + c] * 255.0);
      os << "<rect x=\"" << c * cell << "\" y=\"" << r * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"rgb(" << shade << "," << shade << "," << shade
         << ")\"/>\n";
    }
  for (const Boundary& b : boundaries) {
    os << "<polyline fill=\"none\" stroke=\"orange\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < b.points.size(); ++i) {
      if (i) os << " ";
      os << b.points[i].first * cell + cell / 2 << "," << b.points[i].second * cell + cell / 2;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cvp
