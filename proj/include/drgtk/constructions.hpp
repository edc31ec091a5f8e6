#pragma once

#include <cstddef>
#include <regex>
#include <string>
#include <vector>

#include "drgtk/bundled_data.hpp"
#include "drgtk/graph.hpp"
#include "drgtk/io.hpp"

// Vertex numbering of the named graphs (frozen; test fixtures rely on it):
//   pentagon            i ~ i+1 mod 5
//   petersen            2-subsets of {0..4} in lexicographic order, adjacent iff disjoint
//   icosahedron         0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom;
//                       upper j ~ lower j and lower j+1
//   hoffman_singleton   P(h,i) = 5h+i, Q(h,i) = 25+5h+i
//   doro, conway_smith  as in data/*.edges (see tools/gen/generate_bundled_graphs.py)
//   complete(n)         0..n-1
//   disjoint_cliques    clique t holds t*s .. t*s+s-1

namespace drgtk {

struct NamedGraph {
  enum class Kind { Pentagon, Petersen, Icosahedron, HoffmanSingleton, Doro, ConwaySmith, Complete, DisjointCliques };
  Kind kind{};
  std::size_t p1 = 0;  // complete: n; disjoint_cliques: r
  std::size_t p2 = 0;  // disjoint_cliques: s

  static NamedGraph pentagon() { return {Kind::Pentagon}; }
  static NamedGraph petersen() { return {Kind::Petersen}; }
  static NamedGraph icosahedron() { return {Kind::Icosahedron}; }
  static NamedGraph hoffman_singleton() { return {Kind::HoffmanSingleton}; }
  static NamedGraph doro() { return {Kind::Doro}; }
  static NamedGraph conway_smith() { return {Kind::ConwaySmith}; }
  static NamedGraph complete(std::size_t n) { return {Kind::Complete, n}; }
  static NamedGraph disjoint_cliques(std::size_t r, std::size_t s) { return {Kind::DisjointCliques, r, s}; }

  /// "pentagon", "complete(4)", "disjoint_cliques(3,2)", ...
  static NamedGraph parse(const std::string& name) {
    static const std::regex with_args(R"(^\s*([a-z_]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
    std::smatch m;
    if (std::regex_match(name, m, with_args)) {
      const std::string head = m[1];
      const std::size_t a = std::stoul(m[2]);
      if (head == "complete" && !m[3].matched) return complete(a);
      if (head == "disjoint_cliques" && m[3].matched) return disjoint_cliques(a, std::stoul(m[3]));
    }
    if (name == "pentagon") return pentagon();
    if (name == "petersen") return petersen();
    if (name == "icosahedron") return icosahedron();
    if (name == "hoffman_singleton") return hoffman_singleton();
    if (name == "doro") return doro();
    if (name == "conway_smith") return conway_smith();
    throw PreconditionError("unknown graph name '" + name + "'");
  }

  std::string name() const {
    switch (kind) {
      case Kind::Pentagon: return "pentagon";
      case Kind::Petersen: return "petersen";
      case Kind::Icosahedron: return "icosahedron";
      case Kind::HoffmanSingleton: return "hoffman_singleton";
      case Kind::Doro: return "doro";
      case Kind::ConwaySmith: return "conway_smith";
      case Kind::Complete: return "complete(" + std::to_string(p1) + ")";
      case Kind::DisjointCliques: return "disjoint_cliques(" + std::to_string(p1) + "," + std::to_string(p2) + ")";
    }
    return {};
  }
};

namespace detail {

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  return Graph::from_edge_list(10, edges);
}

inline Graph icosahedron() {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < 5; ++j) {
    const std::size_t up = 1 + j, up_next = 1 + (j + 1) % 5;
    const std::size_t low = 6 + j, low_next = 6 + (j + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(low, low_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up, low_next);
    edges.emplace_back(11, low);
  }
  return Graph::from_edge_list(12, edges);
}

inline Graph hoffman_singleton() {
  auto p = [](std::size_t h, std::size_t i) { return 5 * h + i; };
  auto q = [](std::size_t h, std::size_t i) { return 25 + 5 * h + i; };
  std::vector<Edge> edges;
  for (std::size_t h = 0; h < 5; ++h)
    for (std::size_t i = 0; i < 5; ++i) {
      edges.emplace_back(p(h, i), p(h, (i + 1) % 5));
      edges.emplace_back(q(h, i), q(h, (i + 2) % 5));
      for (std::size_t k = 0; k < 5; ++k) edges.emplace_back(p(h, i), q(k, (h * k + i) % 5));
    }
  return Graph::from_edge_list(50, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

inline Graph disjoint_cliques(std::size_t r, std::size_t s) {
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) edges.emplace_back(t * s + i, t * s + j);
  return Graph::from_edge_list(r * s, edges);
}

inline Graph bundled(std::string_view text, const char* what) {
  try {
    return parse_edge_list(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bundled ") + what + " data is corrupt: " + e.what());
  }
}

}  // namespace detail

inline Graph build(const NamedGraph& id) {
  using K = NamedGraph::Kind;
  switch (id.kind) {
    case K::Pentagon: return detail::cycle(5);
    case K::Petersen: return detail::petersen();
    case K::Icosahedron: return detail::icosahedron();
    case K::HoffmanSingleton: return detail::hoffman_singleton();
    case K::Doro: return detail::bundled(bundled::kDoroEdges, "doro");
    case K::ConwaySmith: return detail::bundled(bundled::kConwaySmithEdges, "conway_smith");
    case K::Complete:
      if (id.p1 == 0) throw PreconditionError("complete(n) needs n >= 1");
      return detail::complete(id.p1);
    case K::DisjointCliques:
      if (id.p1 == 0 || id.p2 == 0) throw PreconditionError("disjoint_cliques(r,s) needs r, s >= 1");
      return detail::disjoint_cliques(id.p1, id.p2);
  }
  throw PreconditionError("unknown named graph");
}

/// Replaces every vertex u by the clique {u*alpha, ..., u*alpha + alpha - 1};
/// cliques of adjacent vertices are joined completely.
inline Graph alpha_clique_extension(const Graph& g, std::size_t alpha) {
  if (alpha == 0) throw PreconditionError("alpha_clique_extension: alpha must be >= 1");
  const std::size_t n = g.order() * alpha;
  std::vector<BitRow> rows(n, BitRow(n));
  for (Vertex x = 0; x < n; ++x) {
    const Vertex u = x / alpha;
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      const Vertex w = y / alpha;
      if (u == w || g.adjacent(u, w)) rows[x].set(y);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace drgtk
