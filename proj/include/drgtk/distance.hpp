#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "drgtk/graph.hpp"

namespace drgtk {

/// All-pairs distances from one breadth-first search per source.
class DistanceMatrix {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  explicit DistanceMatrix(const Graph& g) : n_(g.order()), dist_(n_ * n_, kUnreachable) {
    std::vector<Vertex> queue;
    queue.reserve(n_);
    for (Vertex s = 0; s < n_; ++s) {
      std::uint32_t* row = &dist_[s * n_];
      BitRow unseen = BitRow::full(n_);
      queue.clear();
      queue.push_back(s);
      row[s] = 0;
      unseen.reset(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        BitRow fresh = g.neighbors(u) & unseen;
        fresh.for_each([&](std::size_t w) {
          row[w] = row[u] + 1;
          unseen.reset(w);
          queue.push_back(w);
        });
      }
      if (queue.size() != n_) connected_ = false;
      for (Vertex w : queue) diameter_ = std::max(diameter_, row[w]);
    }
  }

  std::size_t order() const { return n_; }
  std::uint32_t operator()(Vertex u, Vertex w) const { return dist_[u * n_ + w]; }
  bool reachable(Vertex u, Vertex w) const { return (*this)(u, w) != kUnreachable; }

  /// Largest finite distance.
  std::uint32_t diameter() const { return diameter_; }
  bool connected() const { return connected_; }

  /// Γ_i(u)
  BitRow layer(Vertex u, std::uint32_t i) const {
    BitRow out(n_);
    for (Vertex w = 0; w < n_; ++w)
      if ((*this)(u, w) == i) out.set(w);
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  std::uint32_t diameter_ = 0;
  bool connected_ = true;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

/// Γ_1(u) ∩ Γ_1(w) for a pair at distance 2. Throws PreconditionError when
/// d(u,w) != 2.
inline BitRow mu_subgraph(const Graph& g, Vertex u, Vertex w) {
  g.check_vertex(u);
  g.check_vertex(w);
  BitRow common = g.common_neighbors(u, w);
  if (u == w || g.adjacent(u, w) || common.none())
    throw PreconditionError("mu_subgraph: vertices " + std::to_string(u) + " and " + std::to_string(w) +
                            " are not at distance 2");
  return common;
}

}  // namespace drgtk
