#pragma once

// Brute-force references used only by the tests. None of these call into the
// library algorithm they are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "drgtk/graph.hpp"

namespace drgtk::testing {

/// Plain adjacency matrix copy, so the oracles do not share the bit-row code.
inline std::vector<std::vector<char>> matrix_of(const Graph& g) {
  std::vector<std::vector<char>> m(g.order(), std::vector<char>(g.order(), 0));
  for (const auto& [u, w] : g.edges()) m[u][w] = m[w][u] = 1;
  return m;
}

/// Largest coclique containing every vertex of `required`, by subset enumeration.
inline std::size_t brute_max_coclique(const Graph& g, const std::vector<Vertex>& required = {}) {
  const auto m = matrix_of(g);
  const std::size_t n = g.order();
  std::uint32_t need = 0;
  for (Vertex v : required) need |= 1U << v;
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if ((mask & need) != need) continue;
    bool independent = true;
    for (std::size_t i = 0; i < n && independent; ++i)
      if (mask >> i & 1U)
        for (std::size_t j = i + 1; j < n && independent; ++j)
          if ((mask >> j & 1U) && m[i][j]) independent = false;
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Number of cocliques of the given size, by subset enumeration.
inline std::size_t brute_coclique_count(const Graph& g, std::size_t size) {
  const auto m = matrix_of(g);
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
    bool independent = true;
    for (std::size_t i = 0; i < n && independent; ++i)
      if (mask >> i & 1U)
        for (std::size_t j = i + 1; j < n && independent; ++j)
          if ((mask >> j & 1U) && m[i][j]) independent = false;
    if (independent) ++count;
  }
  return count;
}

/// Induced 4-cycle by looking at every 4-subset.
inline bool brute_has_induced_quadrangle(const Graph& g) {
  const auto m = matrix_of(g);
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          const std::size_t s[4] = {a, b, c, d};
          int edges = 0;
          bool degree_two = true;
          for (int i = 0; i < 4; ++i) {
            int deg = 0;
            for (int j = 0; j < 4; ++j)
              if (i != j && m[s[i]][s[j]]) ++deg;
            degree_two = degree_two && deg == 2;
            edges += deg;
          }
          if (degree_two && edges == 8) return true;
        }
  return false;
}

/// Lexicographically smallest adjacency string over all vertex orders.
/// Only for graphs with at most 8 vertices.
inline std::string brute_canonical_form(const Graph& g) {
  const auto m = matrix_of(g);
  std::vector<std::size_t> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) s.push_back(m[perm[i]][perm[j]] ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Decodes graph6 by first expanding the data bytes into a bit string; a
/// second implementation of the layout, kept separate from the library's.
inline std::vector<std::pair<std::size_t, std::size_t>> reference_graph6_edges(const std::string& text, std::size_t& n) {
  n = static_cast<std::size_t>(text[0] - 63);
  std::string bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int value = text[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1) ? '1' : '0');
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t pos = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (bits[pos++] == '1') edges.emplace_back(i, j);
  return edges;
}

/// Shortest cycle length by BFS from every vertex (0 when acyclic).
inline std::size_t brute_girth(const Graph& g) {
  const auto m = matrix_of(g);
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t u = queue[h];
      for (std::size_t w = 0; w < n; ++w) {
        if (!m[u][w]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          queue.push_back(w);
        } else if (parent[u] != static_cast<int>(w)) {
          const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

// -- generators ----------------------------------------------------------------

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

inline Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
  return Graph::from_edge_list(n, edges);
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    g.neighbors(u).for_each([&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    });
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

/// Relabels vertices by a random permutation.
inline Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& [u, w] : g.edges()) edges.emplace_back(perm[u], perm[w]);
  return Graph::from_edge_list(g.order(), edges);
}

/// Cartesian product K_a x K_b (rook's graph).
inline Graph rook_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < a * b; ++x)
    for (std::size_t y = x + 1; y < a * b; ++y)
      if (x / b == y / b || x % b == y % b) edges.emplace_back(x, y);
  return Graph::from_edge_list(a * b, edges);
}

/// Kneser graph K(n, 2): 2-subsets of {0..n-1}, adjacent iff disjoint.
inline Graph kneser2(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const auto [a, b] = pairs[i];
      const auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  return Graph::from_edge_list(pairs.size(), edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

/// Complete multipartite graph with `parts` parts of size `t`.
inline Graph complete_multipartite(std::size_t parts, std::size_t t) {
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < parts * t; ++x)
    for (std::size_t y = x + 1; y < parts * t; ++y)
      if (x / t != y / t) edges.emplace_back(x, y);
  return Graph::from_edge_list(parts * t, edges);
}

/// Common-neighbour count of distance-2 pairs when constant, else -1.
/// Distances are taken from the plain matrix: distance 2 means nonadjacent
/// with at least one common neighbour.
inline long brute_mu(const Graph& g) {
  const auto m = matrix_of(g);
  const std::size_t n = g.order();
  long mu = -1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t w = u + 1; w < n; ++w) {
      if (m[u][w]) continue;
      long common = 0;
      for (std::size_t x = 0; x < n; ++x) common += m[u][x] && m[w][x];
      if (common == 0) continue;
      if (mu >= 0 && common != mu) return -1;
      mu = common;
    }
  return mu;
}

/// Connected, noncomplete graphs with constant μ, drawn from several families
/// so that both Terwilliger and non-Terwilliger cases occur.
inline std::vector<Graph> mu_well_defined_corpus(std::mt19937_64& rng, std::size_t count) {
  std::vector<Graph> out;
  auto accept = [&](const Graph& g) {
    if (out.size() < count && g.order() >= 3 && is_connected(g) && !g.is_complete() && brute_mu(g) >= 1)
      out.push_back(shuffled(rng, g));
  };
  std::size_t round = 0;
  while (out.size() < count) {
    const std::size_t family = round++ % 6;
    switch (family) {
      case 0: accept(random_tree(rng, 4 + round % 9)); break;
      case 1: accept(cycle_graph(4 + round % 7)); break;
      case 2: accept(rook_graph(2 + round % 3, 2 + (round / 3) % 3)); break;
      case 3: accept(complete_multipartite(2 + round % 3, 1 + (round / 2) % 3)); break;
      case 4: {
        // clique extensions of small graphs with constant μ
        Graph base = round % 2 ? cycle_graph(5 + round % 3) : random_tree(rng, 4 + round % 4);
        const std::size_t alpha = 2 + round % 2;
        std::vector<Edge> edges;
        for (const auto& [u, w] : base.edges())
          for (std::size_t i = 0; i < alpha; ++i)
            for (std::size_t j = 0; j < alpha; ++j) edges.emplace_back(u * alpha + i, w * alpha + j);
        for (std::size_t x = 0; x < base.order(); ++x)
          for (std::size_t i = 0; i < alpha; ++i)
            for (std::size_t j = i + 1; j < alpha; ++j) edges.emplace_back(x * alpha + i, x * alpha + j);
        accept(Graph::from_edge_list(base.order() * alpha, edges));
        break;
      }
      default:
        // rejection sampling of small random graphs
        for (int tries = 0; tries < 400; ++tries) {
          const Graph g = random_graph(rng, 5 + tries % 4, 0.35 + 0.1 * (tries % 4));
          if (is_connected(g) && !g.is_complete() && brute_mu(g) >= 1) {
            accept(g);
            break;
          }
        }
    }
  }
  return out;
}

}  // namespace drgtk::testing
