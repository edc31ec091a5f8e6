#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drgtk/bitset.hpp"

namespace drgtk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when a caller violates an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed graph input (bad endpoints, loops).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as bit rows.
class Graph {
 public:
  Graph() = default;

  /// Duplicate pairs collapse to one edge. Throws GraphError on loops or
  /// out-of-range endpoints.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    std::vector<BitRow> rows(n, BitRow(n));
    for (const auto& [u, w] : edges) {
      if (u >= n || w >= n)
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(w) +
                         ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      if (u == w) throw GraphError("loop edge at vertex " + std::to_string(u));
      rows[u].set(w);
      rows[w].set(u);
    }
    return Graph(std::move(rows));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Rows must be symmetric and irreflexive; checked.
  static Graph from_rows(std::vector<BitRow> rows) {
    const std::size_t n = rows.size();
    for (Vertex u = 0; u < n; ++u) {
      if (rows[u].size() != n) throw GraphError("adjacency row has wrong length");
      if (rows[u].test(u)) throw GraphError("loop edge at vertex " + std::to_string(u));
      bool symmetric = true;
      rows[u].for_each([&](std::size_t w) { symmetric = symmetric && rows[w].test(u); });
      if (!symmetric) throw GraphError("adjacency is not symmetric at vertex " + std::to_string(u));
    }
    return Graph(std::move(rows));
  }

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  bool adjacent(Vertex u, Vertex w) const { return rows_[u].test(w); }
  const BitRow& neighbors(Vertex u) const { return rows_[u]; }
  std::size_t degree(Vertex u) const { return rows_[u].count(); }

  /// N[u] = N(u) ∪ {u}
  BitRow closed_neighbors(Vertex u) const {
    BitRow r = rows_[u];
    r.set(u);
    return r;
  }

  std::size_t common_neighbor_count(Vertex u, Vertex w) const {
    return rows_[u].intersection_count(rows_[w]);
  }

  BitRow common_neighbors(Vertex u, Vertex w) const { return rows_[u] & rows_[w]; }

  /// Edges (u, w) with u < w in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      rows_[u].for_each([&](std::size_t w) {
        if (u < w) out.emplace_back(u, w);
      });
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> out(order());
    for (Vertex u = 0; u < order(); ++u) out[u] = degree(u);
    return out;
  }

  bool is_complete() const {
    for (Vertex u = 0; u < order(); ++u)
      if (degree(u) + 1 != order()) return false;
    return true;
  }

  Graph complement() const {
    std::vector<BitRow> rows(order(), BitRow(order()));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex w = 0; w < order(); ++w)
        if (u != w && !adjacent(u, w)) rows[u].set(w);
    return Graph(std::move(rows));
  }

  void check_vertex(Vertex u) const {
    if (u >= order())
      throw PreconditionError("vertex " + std::to_string(u) + " out of range for graph of order " +
                              std::to_string(order()));
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<BitRow> rows) : rows_(std::move(rows)) {}
  std::vector<BitRow> rows_;
};

/// An induced subgraph together with the original label of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> labels;  // labels[new] = old
};

/// Subgraph induced on `vertices` (ascending order); new labels 0..|S|-1.
inline Subgraph induced_subgraph(const Graph& g, const BitRow& vertices) {
  Subgraph out;
  out.labels.reserve(vertices.count());
  vertices.for_each([&](std::size_t v) {
    g.check_vertex(v);
    out.labels.push_back(v);
  });
  const std::size_t m = out.labels.size();
  std::vector<BitRow> rows(m, BitRow(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g.adjacent(out.labels[i], out.labels[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

inline Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  BitRow set(g.order());
  for (Vertex v : vertices) {
    g.check_vertex(v);
    set.set(v);
  }
  return induced_subgraph(g, set);
}

/// Γ_1(u) as an induced subgraph.
inline Subgraph local_graph(const Graph& g, Vertex u) {
  g.check_vertex(u);
  return induced_subgraph(g, g.neighbors(u));
}

inline bool is_clique(const Graph& g, const BitRow& set) {
  bool ok = true;
  set.for_each([&](std::size_t v) { ok = ok && set.is_subset_of(g.closed_neighbors(v)); });
  return ok;
}

inline bool is_coclique(const Graph& g, const BitRow& set) {
  bool ok = true;
  set.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(set); });
  return ok;
}

inline BitRow vertex_set(std::size_t n, std::span<const Vertex> vertices) {
  BitRow set(n);
  for (Vertex v : vertices) set.set(v);
  return set;
}

}  // namespace drgtk
