#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "drgtk/graph.hpp"

namespace drgtk {

namespace detail {

/// Colour refinement run on both graphs with a shared colour dictionary, so
/// equal colours mean equal refined degree information across graphs.
/// Starts from degrees (the neighbour-degree multiset is the first round).
inline void refine_jointly(const Graph& g, const Graph& h, std::vector<std::size_t>& cg, std::vector<std::size_t>& ch) {
  cg = g.degrees();
  ch = h.degrees();
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> dictionary;
    auto signature = [](const Graph& x, const std::vector<std::size_t>& colours, Vertex v) {
      std::vector<std::size_t> sig{colours[v]};
      x.neighbors(v).for_each([&](std::size_t w) { sig.push_back(colours[w]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sg(g.order()), sh(h.order());
    for (Vertex v = 0; v < g.order(); ++v) dictionary[sg[v] = signature(g, cg, v)] = 0;
    for (Vertex v = 0; v < h.order(); ++v) dictionary[sh[v] = signature(h, ch, v)] = 0;
    std::size_t next = 0;
    for (auto& [sig, id] : dictionary) id = next++;
    for (Vertex v = 0; v < g.order(); ++v) cg[v] = dictionary[sg[v]];
    for (Vertex v = 0; v < h.order(); ++v) ch[v] = dictionary[sh[v]];
    if (dictionary.size() == classes) return;
    classes = dictionary.size();
  }
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  std::optional<std::vector<Vertex>> run() {
    const std::size_t n = g_.order();
    if (n != h_.order() || g_.size() != h_.size()) return std::nullopt;
    refine_jointly(g_, h_, colour_g_, colour_h_);
    auto sorted_g = colour_g_, sorted_h = colour_h_;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h) return std::nullopt;

    std::size_t colours = 0;
    for (auto c : colour_g_) colours = std::max(colours, c + 1);
    class_rows_.assign(colours, BitRow(n));
    for (Vertex v = 0; v < n; ++v) class_rows_[colour_h_[v]].set(v);

    map_.assign(n, n);
    used_ = BitRow(n);
    order_.clear();
    mapped_ = BitRow(n);
    if (!extend()) return std::nullopt;
    return map_;
  }

 private:
  // Next G vertex: most already-mapped neighbours, then smallest colour class,
  // then smallest index.
  Vertex pick() const {
    const std::size_t n = g_.order();
    Vertex best = n;
    std::size_t best_links = 0, best_class = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (mapped_.test(v)) continue;
      const std::size_t links = g_.neighbors(v).intersection_count(mapped_);
      const std::size_t cls = class_rows_[colour_g_[v]].count();
      if (best == n || links > best_links || (links == best_links && cls < best_class)) {
        best = v;
        best_links = links;
        best_class = cls;
      }
    }
    return best;
  }

  bool extend() {
    if (order_.size() == g_.order()) return true;
    const Vertex v = pick();
    BitRow candidates = class_rows_[colour_g_[v]];
    candidates.subtract(used_);
    for (Vertex u : order_) {
      if (g_.adjacent(u, v))
        candidates &= h_.neighbors(map_[u]);
      else
        candidates.subtract(h_.neighbors(map_[u]));
    }
    for (std::size_t w = candidates.first(); w < candidates.size(); w = candidates.next(w + 1)) {
      map_[v] = w;
      used_.set(w);
      mapped_.set(v);
      order_.push_back(v);
      if (extend()) return true;
      order_.pop_back();
      mapped_.reset(v);
      used_.reset(w);
    }
    map_[v] = g_.order();
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> colour_g_, colour_h_;
  std::vector<BitRow> class_rows_;
  std::vector<Vertex> map_;
  std::vector<Vertex> order_;
  BitRow used_, mapped_;
};

}  // namespace detail

/// A bijection m with g.adjacent(u,w) == h.adjacent(m[u],m[w]), if one exists.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  return detail::IsomorphismSearch(g, h).run();
}

inline bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

inline bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& m) {
  if (g.order() != h.order() || m.size() != g.order()) return false;
  BitRow image(h.order());
  for (Vertex v : m) {
    if (v >= h.order() || image.test(v)) return false;
    image.set(v);
  }
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w)
      if (g.adjacent(u, w) != h.adjacent(m[u], m[w])) return false;
  return true;
}

}  // namespace drgtk
