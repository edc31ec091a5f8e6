#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "drgtk/graph.hpp"

namespace drgtk {

/// A coclique with its host order; check() re-verifies independence.
struct CocliqueCertificate {
  std::vector<Vertex> vertices;  // ascending
  std::size_t size() const { return vertices.size(); }

  bool check(const Graph& g) const {
    for (Vertex v : vertices)
      if (v >= g.order()) return false;
    const BitRow set = vertex_set(g.order(), vertices);
    return set.count() == vertices.size() && is_coclique(g, set);
  }
};

namespace detail {

/// Maximum independent set by branch and bound. Candidates are partitioned
/// greedily into cliques of g (each clique holds at most one vertex of any
/// coclique); the number of cliques bounds what the candidates can add.
/// Branching follows the partition order back to front; among equally large
/// cocliques the first one found is kept.
class CocliqueSearch {
 public:
  explicit CocliqueSearch(const Graph& g) : g_(g) {}

  std::vector<Vertex> run(const BitRow& candidates, std::vector<Vertex> seed) {
    current_ = std::move(seed);
    best_ = current_;
    expand(candidates);
    return best_;
  }

 private:
  void expand(BitRow candidates) {
    std::vector<std::pair<Vertex, std::size_t>> order;  // (vertex, clique number)
    order.reserve(candidates.count());
    BitRow uncovered = candidates;
    std::size_t cliques = 0;
    while (uncovered.any()) {
      ++cliques;
      BitRow joinable = uncovered;
      while (joinable.any()) {
        const Vertex v = joinable.first();
        joinable.reset(v);
        joinable &= g_.neighbors(v);
        uncovered.reset(v);
        order.emplace_back(v, cliques);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto [v, bound] = *it;
      if (current_.size() + bound <= best_.size()) return;
      current_.push_back(v);
      BitRow next = candidates;
      next.subtract(g_.closed_neighbors(v));
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// A maximum-cardinality coclique of g containing `required`. Throws
/// PreconditionError when `required` is not a coclique.
inline CocliqueCertificate max_coclique_containing(const Graph& g, std::span<const Vertex> required) {
  for (Vertex v : required) g.check_vertex(v);
  const BitRow seed = vertex_set(g.order(), required);
  if (!is_coclique(g, seed)) throw PreconditionError("max_coclique_containing: required set is not a coclique");

  BitRow candidates = BitRow::full(g.order());
  seed.for_each([&](std::size_t v) { candidates.subtract(g.closed_neighbors(v)); });
  auto found = detail::CocliqueSearch(g).run(candidates, seed.to_vector());
  std::sort(found.begin(), found.end());
  return CocliqueCertificate{std::move(found)};
}

inline CocliqueCertificate max_coclique_containing(const Graph& g, std::initializer_list<Vertex> required) {
  return max_coclique_containing(g, std::span<const Vertex>(required.begin(), required.size()));
}

/// Every coclique of exactly `size` vertices, each ascending, in lexicographic order.
inline std::vector<std::vector<Vertex>> enumerate_cocliques(const Graph& g, std::size_t size) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  auto recurse = [&](auto&& self, const BitRow& candidates) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    if (current.size() + candidates.count() < size) return;
    for (std::size_t v = candidates.first(); v < candidates.size(); v = candidates.next(v + 1)) {
      BitRow next(g.order());
      for (std::size_t w = candidates.next(v + 1); w < candidates.size(); w = candidates.next(w + 1)) next.set(w);
      next.subtract(g.neighbors(v));
      current.push_back(v);
      self(self, next);
      current.pop_back();
    }
  };
  recurse(recurse, BitRow::full(g.order()));
  return out;
}

}  // namespace drgtk
