#pragma once
// Readers and writers for the 9th DIMACS Implementation Challenge road
// network text formats:
//
//   .gr   c <comment>                 .co   c <comment>
//         p sp <n> <m>                      p aux sp co <n>
//         a <u> <v> <w> [category]          v <id> <lon*1e6> <lat*1e6>
//
// Node ids are 1-based on disk and 0-based in memory.  An optional fourth
// arc field carries the road category used by the speed model.

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cvp/graph.hpp"

namespace cvp {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

inline double parse_number(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw DimacsError("malformed number '" + tok + "'", line);
  }
}

inline long long parse_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw DimacsError("malformed integer '" + tok + "'", line);
  return v;
}

}  // namespace detail

// Parses a .gr arc listing.  Arc count must match the header; weights must be
// non-negative; node ids must lie in [1, n].
inline Graph parse_dimacs_gr(std::istream& in) {
  std::string raw;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty() || raw[0] == 'c') continue;
    std::vector<std::string> f = detail::split_ws(raw);
    if (f.empty()) continue;
    if (f[0] == "p") {
      if (have_header) throw DimacsError("duplicate problem line", lineno);
      if (f.size() != 4 || f[1] != "sp") throw DimacsError("malformed problem line", lineno);
      n = detail::parse_int(f[2], lineno);
      m = detail::parse_int(f[3], lineno);
      if (n < 0 || m < 0) throw DimacsError("negative size in problem line", lineno);
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
    } else if (f[0] == "a") {
      if (!have_header) throw DimacsError("arc before problem line", lineno);
      if (f.size() != 4 && f.size() != 5) throw DimacsError("malformed arc line", lineno);
      long long u = detail::parse_int(f[1], lineno);
      long long v = detail::parse_int(f[2], lineno);
      double w = detail::parse_number(f[3], lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw DimacsError("node id out of range", lineno);
      if (!(w >= 0.0)) throw DimacsError("negative weight", lineno);
      Edge e{static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w, -1};
      if (f.size() == 5) e.category = static_cast<std::int32_t>(detail::parse_int(f[4], lineno));
      edges.push_back(e);
    } else {
      throw DimacsError("unrecognized line type '" + f[0] + "'", lineno);
    }
  }
  if (!have_header) throw DimacsError("missing problem line", lineno == 0 ? 1 : lineno);
  if (static_cast<long long>(edges.size()) != m)
    throw DimacsError("arc count " + std::to_string(edges.size()) + " does not match header " +
                          std::to_string(m),
                      lineno == 0 ? 1 : lineno);
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

// Parses a .co coordinate listing for a graph with `node_count` nodes.
// Coordinates are stored on disk as integers scaled by 1e6.  Every node must
// receive exactly one coordinate pair.
inline NodeGeometry parse_dimacs_co(std::istream& in, std::size_t node_count) {
  std::string raw;
  std::size_t lineno = 0;
  NodeGeometry geom;
  geom.lonlat.assign(node_count, {kInfCost, kInfCost});
  std::vector<bool> seen(node_count, false);
  std::size_t filled = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty() || raw[0] == 'c' || raw[0] == 'p') continue;
    std::vector<std::string> f = detail::split_ws(raw);
    if (f.empty()) continue;
    if (f[0] != "v") throw DimacsError("unrecognized line type '" + f[0] + "'", lineno);
    if (f.size() != 4) throw DimacsError("malformed coordinate line", lineno);
    long long id = detail::parse_int(f[1], lineno);
    if (id < 1 || static_cast<std::size_t>(id) > node_count)
      throw DimacsError("node id out of range", lineno);
    if (seen[id - 1]) throw DimacsError("duplicate coordinate for node " + std::to_string(id), lineno);
    seen[id - 1] = true;
    ++filled;
    geom.lonlat[id - 1] = {detail::parse_number(f[2], lineno) / 1e6,
                           detail::parse_number(f[3], lineno) / 1e6};
  }
  if (filled != node_count)
    throw DimacsError("coordinates cover " + std::to_string(filled) + " of " +
                          std::to_string(node_count) + " nodes",
                      lineno == 0 ? 1 : lineno);
  return geom;
}

struct ParsedNetwork {
  Graph graph;
  std::optional<NodeGeometry> geometry;
};

inline ParsedNetwork parse_dimacs(std::istream& gr, std::istream* co = nullptr) {
  ParsedNetwork net{parse_dimacs_gr(gr), std::nullopt};
  if (co != nullptr) net.geometry = parse_dimacs_co(*co, net.graph.node_count());
  return net;
}

// Round-trip writers.  Weights that hold integral values are printed as
// integers so that integer-weight files survive parse -> write -> parse
// byte-identically in their numeric fields.
inline std::string write_dimacs_gr(const Graph& g) {
  std::ostringstream os;
  os << "p sp " << g.node_count() << ' ' << g.edge_count() << '\n';
  os.precision(17);
  for (const Edge& e : g.edges()) {
    os << "a " << e.from + 1 << ' ' << e.to + 1 << ' ';
    if (e.cost == static_cast<long long>(e.cost))
      os << static_cast<long long>(e.cost);
    else
      os << e.cost;
    if (e.category >= 0) os << ' ' << e.category;
    os << '\n';
  }
  return os.str();
}

inline std::string write_dimacs_co(const NodeGeometry& geom) {
  std::ostringstream os;
  os << "p aux sp co " << geom.size() << '\n';
  for (NodeId v = 0; v < geom.size(); ++v)
    os << "v " << v + 1 << ' ' << static_cast<long long>(geom.lon(v) * 1e6) << ' '
       << static_cast<long long>(geom.lat(v) * 1e6) << '\n';
  return os.str();
}

}  // namespace cvp
