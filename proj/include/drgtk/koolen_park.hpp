#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "drgtk/coclique.hpp"
#include "drgtk/graph.hpp"
#include "drgtk/outcome.hpp"
#include "drgtk/parallel.hpp"
#include "drgtk/rational.hpp"
#include "drgtk/regularity.hpp"
#include "drgtk/terwilliger.hpp"

// The coclique parameter c of a graph: the largest c such that for every
// vertex x, every nonadjacent pair y, z of Γ_1(x) lies in a c-coclique of
// Γ_1(x). Amply regular graphs satisfy
//
//     μ - 1 >= max_{2 <= c' <= c} (c'(λ+1) - k) / C(c', 2),
//
// and when equality holds every μ-subgraph is a clique (the graph is
// Terwilliger). All bound values are exact rationals.

namespace drgtk {

struct CocliqueParameter {
  std::int64_t c = 0;
  std::vector<std::int64_t> per_vertex;  // min over the pairs of Γ_1(x)
  Vertex x = 0, y = 0, z = 0;            // a pair attaining c (labels in the host graph)
  CocliqueCertificate witness;           // host labels
};

/// c is undefined when some local graph has no nonadjacent pair.
struct CocliqueParameterUndefined {
  Vertex complete_local_vertex = 0;
};

inline Outcome<CocliqueParameter, CocliqueParameterUndefined> kp_c(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("kp_c: empty graph");
  struct Local {
    std::optional<std::int64_t> best;
    Vertex y = 0, z = 0;
    CocliqueCertificate witness;
  };
  std::vector<Local> locals(n);
  parallel_for(n, [&](std::size_t x) {
    const auto local = local_graph(g, x);
    const Graph& l = local.graph;
    Local& out = locals[x];
    for (Vertex y = 0; y < l.order(); ++y)
      for (Vertex z = y + 1; z < l.order(); ++z) {
        if (l.adjacent(y, z)) continue;
        auto cert = max_coclique_containing(l, {y, z});
        const auto size = static_cast<std::int64_t>(cert.size());
        if (!out.best || size < *out.best) {
          out.best = size;
          out.y = local.labels[y];
          out.z = local.labels[z];
          for (auto& v : cert.vertices) v = local.labels[v];
          out.witness = std::move(cert);
        }
      }
  });

  CocliqueParameter result;
  result.c = std::numeric_limits<std::int64_t>::max();
  for (Vertex x = 0; x < n; ++x) {
    if (!locals[x].best) return CocliqueParameterUndefined{x};
    result.per_vertex.push_back(*locals[x].best);
    if (*locals[x].best < result.c) {
      result.c = *locals[x].best;
      result.x = x;
      result.y = locals[x].y;
      result.z = locals[x].z;
      result.witness = locals[x].witness;
    }
  }
  return result;
}

struct KpBound {
  std::map<std::int64_t, Rational> values;  // c' -> (c'(λ+1) - k) / C(c', 2), for 2 <= c' <= c
  Rational max_value;
  std::int64_t argmax = 2;  // smallest maximizing c'
};

/// (c'(λ+1) - k) / C(c', 2) for one c'.
inline Rational kp_bound_value(std::int64_t k, std::int64_t lambda, std::int64_t cprime) {
  const Integer cp = cprime;
  return Rational(cp * (Integer(lambda) + 1) - k, choose2(cp));
}

inline KpBound kp_bound(std::int64_t k, std::int64_t lambda, std::int64_t c) {
  if (c < 2) throw PreconditionError("kp_bound: c must be at least 2");
  if (k < 1) throw PreconditionError("kp_bound: k must be at least 1");
  KpBound out;
  for (std::int64_t cp = 2; cp <= c; ++cp) {
    Rational value = kp_bound_value(k, lambda, cp);
    if (cp == 2 || value > out.max_value) {
      out.max_value = value;
      out.argmax = cp;
    }
    out.values.emplace(cp, std::move(value));
  }
  return out;
}

/// The three sums of the inclusion-exclusion count over a coclique
/// {y_1..y_m} of Γ_1(x):
///   k >= Σ|Γ_1(x) ∩ (Γ_1(y_i) ∪ {y_i})| - Σ_{i<j}|Γ_1(x) ∩ Γ_1(y_i) ∩ Γ_1(y_j)|.
struct InclusionExclusionTerms {
  std::int64_t k = 0;
  std::int64_t singles = 0;
  std::int64_t pairs = 0;
  std::int64_t max_pair = 0;  // largest single pairwise intersection
  std::int64_t min_pair = std::numeric_limits<std::int64_t>::max();
  bool covers = false;        // Γ_1(x) ⊆ ∪(Γ_1(y_i) ∪ {y_i})

  bool holds() const { return k >= singles - pairs; }
};

inline InclusionExclusionTerms inclusion_exclusion_terms(const Graph& g, Vertex x, std::span<const Vertex> coclique) {
  const BitRow& local = g.neighbors(x);
  InclusionExclusionTerms t;
  t.k = static_cast<std::int64_t>(local.count());
  BitRow covered(g.order());
  for (std::size_t i = 0; i < coclique.size(); ++i) {
    const BitRow closed = g.closed_neighbors(coclique[i]);
    t.singles += static_cast<std::int64_t>(local.intersection_count(closed));
    covered |= closed;
    for (std::size_t j = i + 1; j < coclique.size(); ++j) {
      const auto common = static_cast<std::int64_t>((local & g.neighbors(coclique[i])).intersection_count(g.neighbors(coclique[j])));
      t.pairs += common;
      t.max_pair = std::max(t.max_pair, common);
      t.min_pair = std::min(t.min_pair, common);
    }
  }
  t.covers = local.is_subset_of(covered);
  return t;
}

/// For every vertex x and every c-coclique of Γ_1(x): Γ_1(x) is covered by
/// the closed neighbourhoods of the coclique and each pair of coclique
/// vertices has exactly μ - 1 common neighbours inside Γ_1(x).
inline bool equality_cover_property(const Graph& g, std::int64_t c, std::int64_t mu) {
  std::vector<char> ok(g.order(), 1);
  parallel_for(g.order(), [&](std::size_t x) {
    const auto local = local_graph(g, x);
    for (auto coclique : enumerate_cocliques(local.graph, static_cast<std::size_t>(c))) {
      for (auto& v : coclique) v = local.labels[v];
      const auto t = inclusion_exclusion_terms(g, x, coclique);
      if (!t.covers || (c >= 2 && (t.max_pair != mu - 1 || t.min_pair != mu - 1))) {
        ok[x] = 0;
        return;
      }
    }
  });
  for (char v : ok)
    if (!v) return false;
  return true;
}

struct KpReport {
  AmplyRegularParams params;
  std::optional<std::int64_t> c;                     // nullopt: c undefined
  std::optional<Vertex> complete_local_vertex;       // set when c is undefined
  std::vector<std::int64_t> per_vertex_c;
  std::map<std::int64_t, Rational> bound_values;
  std::optional<Rational> max_value;
  std::optional<std::int64_t> argmax_cprime;
  std::int64_t mu_minus_1 = 0;
  bool bound_holds = false;
  bool equality = false;
  bool terwilliger = false;
  std::optional<bool> cover_property;                // evaluated when equality holds
};

struct NotAmplyRegular {
  AmplyRegularFailure failure;
};

/// Full report for an amply regular graph. When equality holds the
/// Terwilliger verdict and the cover property are computed from the graph,
/// not inferred.
inline Outcome<KpReport, NotAmplyRegular> kp_check(const Graph& g) {
  const auto params = amply_regular_params(g);
  if (!params) return NotAmplyRegular{params.error()};
  KpReport report;
  report.params = *params;
  report.mu_minus_1 = params->mu - 1;
  report.terwilliger = is_terwilliger(g).is_terwilliger;

  const auto c = kp_c(g);
  if (!c) {
    report.complete_local_vertex = c.error().complete_local_vertex;
    return report;
  }
  report.c = c->c;
  report.per_vertex_c = c->per_vertex;
  auto bound = kp_bound(params->k, params->lambda, c->c);
  report.bound_values = std::move(bound.values);
  report.max_value = bound.max_value;
  report.argmax_cprime = bound.argmax;
  report.bound_holds = Rational(report.mu_minus_1) >= bound.max_value;
  report.equality = Rational(report.mu_minus_1) == bound.max_value;
  if (report.equality) report.cover_property = equality_cover_property(g, c->c, params->mu);
  return report;
}

}  // namespace drgtk
