#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "drgtk/distance.hpp"
#include "drgtk/graph.hpp"
#include "drgtk/isomorphism.hpp"
#include "drgtk/outcome.hpp"
#include "drgtk/parallel.hpp"
#include "drgtk/regularity.hpp"

namespace drgtk {

struct MuWitness {
  Vertex u = 0, w = 0;
  std::int64_t expected = 0, found = 0;
};

/// μ when every distance-2 pair has the same number of common neighbours.
/// Throws PreconditionError on complete or disconnected input.
inline Outcome<std::int64_t, MuWitness> mu_well_defined(const Graph& g) {
  detail::require_connected_noncomplete(g, "mu_well_defined");
  std::optional<std::int64_t> mu;
  if (auto failure = detail::scan_mu(g, mu)) return MuWitness{failure->u, failure->w, failure->expected, failure->found};
  return *mu;
}

/// Induced 4-cycle a-b-c-d-a, found by looking at each vertex b as the middle
/// of an induced 2-path a-b-c.
inline std::optional<std::array<Vertex, 4>> find_induced_quadrangle(const Graph& g) {
  for (Vertex b = 0; b < g.order(); ++b) {
    const auto nb = g.neighbors(b).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i], c = nb[j];
        if (g.adjacent(a, c)) continue;
        BitRow far = g.common_neighbors(a, c);
        far.subtract(g.closed_neighbors(b));
        if (far.any()) return std::array<Vertex, 4>{a, b, c, far.first()};
      }
  }
  return std::nullopt;
}

struct TerwilligerWitness {
  enum class Kind { DeviantMu, NonCliqueMu };
  Kind kind{};
  Vertex u = 0, w = 0;  // the distance-2 pair
  std::int64_t expected_mu = 0, found_mu = 0;  // DeviantMu
  Vertex y = 0, z = 0;  // NonCliqueMu: nonadjacent common neighbours (u-y-w-z is an induced quadrangle)
};

struct TerwilligerVerdict {
  bool is_terwilliger = false;
  std::optional<std::int64_t> mu;
  std::optional<TerwilligerWitness> witness;
};

/// Every μ-subgraph has the same size and is a clique. Cross-checked against
/// find_induced_quadrangle whenever μ is well-defined.
inline TerwilligerVerdict is_terwilliger(const Graph& g) {
  TerwilligerVerdict verdict;
  auto mu = mu_well_defined(g);
  if (!mu) {
    const auto& e = mu.error();
    verdict.witness = TerwilligerWitness{TerwilligerWitness::Kind::DeviantMu, e.u, e.w, e.expected, e.found};
    return verdict;
  }
  verdict.mu = *mu;
  for (Vertex u = 0; u < g.order() && !verdict.witness; ++u)
    for (Vertex w = u + 1; w < g.order() && !verdict.witness; ++w) {
      if (g.adjacent(u, w)) continue;
      const BitRow common = g.common_neighbors(u, w);
      common.for_each([&](std::size_t y) {
        if (verdict.witness) return;
        BitRow missing = common;
        missing.subtract(g.closed_neighbors(y));
        if (missing.any()) {
          verdict.witness = TerwilligerWitness{TerwilligerWitness::Kind::NonCliqueMu, u, w, *mu, *mu, y, missing.first()};
        }
      });
    }
  verdict.is_terwilliger = !verdict.witness;
  if (verdict.is_terwilliger == find_induced_quadrangle(g).has_value())
    throw std::logic_error("is_terwilliger: mu-subgraph check disagrees with quadrangle search");
  return verdict;
}

/// Every local graph is Terwilliger with diameter 2 and μ one less than the
/// host's. Throws PreconditionError unless g is Terwilliger with μ > 1.
inline bool local_mu_descent_check(const Graph& g) {
  const auto verdict = is_terwilliger(g);
  if (!verdict.is_terwilliger || *verdict.mu <= 1)
    throw PreconditionError("local_mu_descent_check: graph must be Terwilliger with mu > 1");
  for (Vertex u = 0; u < g.order(); ++u) {
    const Graph local = local_graph(g, u).graph;
    if (local.order() == 0 || local.is_complete()) return false;
    const DistanceMatrix dist(local);
    if (!dist.connected() || dist.diameter() != 2) return false;
    const auto lv = is_terwilliger(local);
    if (!lv.is_terwilliger || *lv.mu != *verdict.mu - 1) return false;
  }
  return true;
}

struct ExtensionDecomposition {
  std::size_t alpha = 1;
  Graph quotient;
  std::vector<Vertex> class_map;  // vertex -> quotient vertex
};

/// Groups vertices by closed neighbourhood. When all twin classes have the
/// same size α, the quotient is induced on the smallest member of each class
/// (classes numbered by smallest member); otherwise α = 1 and quotient = g.
inline ExtensionDecomposition clique_extension_decompose(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("clique_extension_decompose: empty graph");
  std::map<BitRow, std::vector<Vertex>> by_neighbourhood;
  for (Vertex v = 0; v < g.order(); ++v) by_neighbourhood[g.closed_neighbors(v)].push_back(v);

  std::vector<std::vector<Vertex>> classes;
  for (auto& [row, members] : by_neighbourhood) classes.push_back(members);
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  const std::size_t alpha = classes.front().size();
  bool uniform = true;
  for (const auto& c : classes) uniform = uniform && c.size() == alpha;

  ExtensionDecomposition out;
  if (!uniform || alpha == 1) {
    out.alpha = 1;
    out.quotient = g;
    out.class_map.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) out.class_map[v] = v;
    return out;
  }
  out.alpha = alpha;
  out.class_map.resize(g.order());
  std::vector<Vertex> representatives;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    representatives.push_back(classes[i].front());
    for (Vertex v : classes[i]) out.class_map[v] = i;
  }
  out.quotient = induced_subgraph(g, representatives).graph;
  return out;
}

/// Every local graph is isomorphic to delta.
inline bool is_locally(const Graph& g, const Graph& delta) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) != delta.order()) return false;
  std::vector<char> ok(g.order(), 0);
  parallel_for(g.order(), [&](std::size_t u) { ok[u] = are_isomorphic(local_graph(g, u).graph, delta); });
  for (char x : ok)
    if (!x) return false;
  return true;
}

struct FsrShape {
  std::int64_t s = 0, r = 0;
  friend bool operator==(const FsrShape&, const FsrShape&) = default;
};

/// (s, r) when g is strongly regular with μ = 1 and every local graph is r
/// disjoint s-cliques. The failure string says which condition broke.
inline Outcome<FsrShape, std::string> recognize_fsr(const Graph& g) {
  if (g.order() == 0) return std::string("empty graph");
  const DistanceMatrix dist(g);
  if (!dist.connected()) throw PreconditionError("recognize_fsr: graph is disconnected");
  if (g.is_complete()) return std::string("graph is complete");
  if (dist.diameter() != 2) return "diameter is " + std::to_string(dist.diameter()) + ", not 2";
  const auto params = amply_regular_params(g);
  if (!params) return "not strongly regular: " + params.error().describe();
  if (params->mu != 1) return "mu is " + std::to_string(params->mu) + ", not 1";

  const std::int64_t s = params->lambda + 1;
  if (params->k % s != 0) return std::string("k is not a multiple of lambda + 1");
  const std::int64_t r = params->k / s;
  for (Vertex u = 0; u < g.order(); ++u) {
    const Graph local = local_graph(g, u).graph;
    BitRow unseen = BitRow::full(local.order());
    std::int64_t cliques = 0;
    while (unseen.any()) {
      const Vertex x = unseen.first();
      const BitRow component = local.closed_neighbors(x);
      if (static_cast<std::int64_t>(component.count()) != s || !is_clique(local, component) ||
          !component.is_subset_of(unseen))
        return "local graph of vertex " + std::to_string(u) + " is not a disjoint union of " + std::to_string(s) +
               "-cliques";
      for (std::size_t y = component.first(); y < component.size(); y = component.next(y + 1))
        if ((local.neighbors(y) & unseen).count() + 1 != static_cast<std::size_t>(s))
          return "local graph of vertex " + std::to_string(u) + " has a component that is not a clique";
      unseen.subtract(component);
      ++cliques;
    }
    if (cliques != r) return "local graph of vertex " + std::to_string(u) + " has the wrong number of cliques";
  }
  if (params->v != 1 + r * s + s * s * r * (r - 1) || params->k != r * s || params->lambda != s - 1)
    return std::string("parameters do not match v = 1 + rs + s^2 r(r-1)");
  return FsrShape{s, r};
}

}  // namespace drgtk
