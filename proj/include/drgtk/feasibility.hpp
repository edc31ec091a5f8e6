#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "drgtk/outcome.hpp"
#include "drgtk/parallel.hpp"
#include "drgtk/rational.hpp"
#include "drgtk/regularity.hpp"

// Parameter arithmetic for strongly regular graphs, the local-quotient
// recursion of amply regular Terwilliger graphs, and the descent scan over
// (k, λ, μ) that looks for hosts able to meet the coclique bound with
// equality. Everything is exact; nothing here constructs a graph.

namespace drgtk {

struct SrgParams {
  Integer v, k, lambda, mu;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams& a, const SrgParams& b) {
    return std::tie(a.v, a.k, a.lambda, a.mu) <=> std::tie(b.v, b.k, b.lambda, b.mu);
  }
  std::string to_string() const {
    return "(" + v.str() + "," + k.str() + "," + lambda.str() + "," + mu.str() + ")";
  }
};

/// (k, λ, μ) of an amply regular host; v is not needed by the recursion.
struct HostParams {
  Integer k, lambda, mu;
  friend bool operator==(const HostParams&, const HostParams&) = default;
  friend auto operator<=>(const HostParams& a, const HostParams& b) {
    return std::tie(a.k, a.lambda, a.mu) <=> std::tie(b.k, b.lambda, b.mu);
  }
  std::string to_string() const { return "(" + k.str() + "," + lambda.str() + "," + mu.str() + ")"; }
};

/// k ≥ 1, 1 ≤ μ ≤ k, 0 ≤ λ, v = 1 + k + k(k-λ-1)/μ exactly, and v > k + 1
/// (noncomplete, so the graph has diameter 2).
inline bool is_valid_srg(const SrgParams& p) {
  if (p.k < 1 || p.mu < 1 || p.mu > p.k || p.lambda < 0 || p.lambda > p.k - 2) return false;
  const Integer num = p.k * (p.k - p.lambda - 1);
  if (num % p.mu != 0) return false;
  return p.v == 1 + p.k + num / p.mu && p.v > p.k + 1;
}

struct DivisibilityFailure {
  Integer numerator;  // k(k-λ-1)
  Integer mu;
  Integer remainder;
};

inline Outcome<SrgParams, DivisibilityFailure> srg_complete(const Integer& k, const Integer& lambda, const Integer& mu) {
  if (k < 1 || mu < 1 || lambda < 0 || lambda > k - 1)
    throw PreconditionError("srg_complete: need k >= 1, mu >= 1, 0 <= lambda <= k-1");
  const Integer num = k * (k - lambda - 1);
  if (num % mu != 0) return DivisibilityFailure{num, mu, num % mu};
  return SrgParams{1 + k + num / mu, k, lambda, mu};
}

struct EigenvalueCheck {
  Integer discriminant;                                // (μ-λ)^2 + 4(k-μ)
  std::optional<std::pair<Integer, Integer>> roots;    // (larger, smaller) when the discriminant is a square
  bool integral = false;
  bool conference = false;                             // (v-1)(μ-λ) = 2k
  bool feasible = false;
};

/// Restricted eigenvalues are the roots of x^2 + (μ-λ)x + (μ-k) = 0. They must
/// be integers unless the graph is a conference graph (equal multiplicities).
inline EigenvalueCheck eigenvalue_feasible(const SrgParams& p) {
  if (!is_valid_srg(p)) throw PreconditionError("eigenvalue_feasible: invalid parameters " + p.to_string());
  EigenvalueCheck out;
  out.discriminant = (p.mu - p.lambda) * (p.mu - p.lambda) + 4 * (p.k - p.mu);
  if (is_perfect_square(out.discriminant)) {
    const Integer root = isqrt(out.discriminant);
    const Integer plus = p.lambda - p.mu + root, minus = p.lambda - p.mu - root;
    out.integral = plus % 2 == 0 && minus % 2 == 0;
    if (out.integral) out.roots = std::pair{plus / 2, minus / 2};
  }
  out.conference = (p.v - 1) * (p.mu - p.lambda) == 2 * p.k;
  out.feasible = out.integral || out.conference;
  return out;
}

/// A member of F(s,r): strongly regular with μ = 1 whose local graphs are r
/// disjoint s-cliques.
struct FsrParams {
  std::int64_t s = 0, r = 0;
  Integer v() const { return 1 + Integer(r) * s + Integer(s) * s * r * (r - 1); }
  Integer k() const { return Integer(r) * s; }
  Integer lambda() const { return Integer(s) - 1; }
  SrgParams srg() const { return SrgParams{v(), k(), lambda(), 1}; }
  friend bool operator==(const FsrParams&, const FsrParams&) = default;
  friend auto operator<=>(const FsrParams&, const FsrParams&) = default;
};

struct FsrRejection {
  std::int64_t s = 0, r = 0;  // s + 1 > r
};

/// Rejects (s, r) with s + 1 > r, which cannot occur.
inline Outcome<FsrParams, FsrRejection> fsr_params(std::int64_t s, std::int64_t r) {
  if (s < 1 || r < 1) throw PreconditionError("fsr_params: s and r must be positive");
  if (s + 1 > r) return FsrRejection{s, r};
  return FsrParams{s, r};
}

/// Reads (s, r) off a μ = 1 parameter set: s = λ + 1, r = k / s, with the
/// vertex count checked.
inline std::optional<FsrParams> fsr_shape_of(const SrgParams& p) {
  if (p.mu != 1) return std::nullopt;
  const Integer s = p.lambda + 1;
  if (p.k % s != 0) return std::nullopt;
  FsrParams f{static_cast<std::int64_t>(s), static_cast<std::int64_t>(p.k / s)};
  if (f.srg() != p) return std::nullopt;
  return f;
}

struct LocalQuotient {
  Integer alpha;
  SrgParams quotient;
  friend bool operator==(const LocalQuotient&, const LocalQuotient&) = default;
};

/// Candidate (α, quotient) pairs for an amply regular Terwilliger host with
/// μ ≥ 2 whose local graphs are α-clique extensions of a strongly regular
/// graph: v̄ = k/α, k̄ = (λ-α+1)/α, μ̄ = (μ-1)/α, λ̄ solved from the vertex
/// count. Kept when λ̄ is a nonnegative integer with α ≤ λ̄ + 1 (so α = 1 when
/// λ̄ = 0) and the quotient is a valid noncomplete parameter set.
inline std::vector<LocalQuotient> local_quotients(const HostParams& host) {
  if (host.mu < 2) throw PreconditionError("local_quotients: host must have mu >= 2");
  std::vector<LocalQuotient> out;
  const Integer limit = std::min<Integer>({host.k, host.lambda + 1, host.mu - 1});
  for (Integer alpha = 1; alpha <= limit; ++alpha) {
    if (host.k % alpha != 0 || (host.lambda + 1) % alpha != 0 || (host.mu - 1) % alpha != 0) continue;
    const Integer v = host.k / alpha;
    const Integer k = (host.lambda + 1 - alpha) / alpha;
    const Integer mu = (host.mu - 1) / alpha;
    if (k < 1) continue;
    const Integer excess = v - 1 - k;  // k(k-λ-1)/μ
    if (excess <= 0) continue;
    const Integer num = mu * excess;
    if (num % k != 0) continue;
    const Integer lambda = k - 1 - num / k;
    if (lambda < 0 || alpha > lambda + 1) continue;
    SrgParams q{v, k, lambda, mu};
    if (!is_valid_srg(q)) continue;
    out.push_back({alpha, std::move(q)});
  }
  return out;
}

inline std::vector<LocalQuotient> local_quotients(const AmplyRegularParams& p) {
  return local_quotients(HostParams{p.k, p.lambda, p.mu});
}

/// Host (k, λ, μ) whose local graphs are the α-clique extension of a graph
/// with parameters p: k = α(1 + k̄ + k̄(k̄-λ̄-1)/μ̄), λ = αk̄ + α - 1, μ = αμ̄ + 1.
inline HostParams compose_extension_host(const Integer& alpha, const SrgParams& p) {
  if (alpha < 1) throw PreconditionError("compose_extension_host: alpha must be >= 1");
  if (p.mu < 1) throw PreconditionError("compose_extension_host: mu must be >= 1");
  const Integer num = p.k * (p.k - p.lambda - 1);
  if (num % p.mu != 0) throw PreconditionError("compose_extension_host: mu does not divide k(k-lambda-1)");
  return HostParams{alpha * (1 + p.k + num / p.mu), alpha * p.k + alpha - 1, alpha * p.mu + 1};
}

/// The quadratic c^2 μ̄ - c(μ̄ + 2(k̄+1)) + 2v̄ = 0 that an equality-attaining c
/// must satisfy at quotient level, plus the derived inequality
/// (μ̄/2 - (k̄+1))^2 ≥ 2k̄(k̄-λ̄-1), which is equivalent to a real root.
struct EqualityQuadratic {
  Integer linear;        // μ̄ + 2(k̄+1)
  Integer discriminant;  // linear^2 - 8v̄μ̄
  bool real_roots = false;
  std::vector<Integer> integral_roots;  // all integer roots, ascending
  std::vector<Integer> admissible_roots;  // integer roots ≥ 2
  Rational gap_lhs, gap_rhs;
  bool gap_holds = false;
};

inline EqualityQuadratic equality_quadratic(const SrgParams& p) {
  if (!is_valid_srg(p)) throw PreconditionError("equality_quadratic: invalid parameters " + p.to_string());
  EqualityQuadratic out;
  out.linear = p.mu + 2 * (p.k + 1);
  out.discriminant = out.linear * out.linear - 8 * p.v * p.mu;
  out.real_roots = out.discriminant >= 0;
  if (is_perfect_square(out.discriminant)) {
    const Integer root = isqrt(out.discriminant);
    for (const Integer& top : {Integer(out.linear - root), Integer(out.linear + root)}) {
      if (top % (2 * p.mu) != 0) continue;
      Integer c = top / (2 * p.mu);
      if (std::find(out.integral_roots.begin(), out.integral_roots.end(), c) == out.integral_roots.end())
        out.integral_roots.push_back(c);
    }
    std::sort(out.integral_roots.begin(), out.integral_roots.end());
    for (const auto& c : out.integral_roots)
      if (c >= 2) out.admissible_roots.push_back(c);
  }
  const Rational half_mu_gap = Rational(p.mu, 2) - Rational(p.k + 1);
  out.gap_lhs = half_mu_gap * half_mu_gap;
  out.gap_rhs = Rational(2 * p.k * (p.k - p.lambda - 1));
  out.gap_holds = out.gap_lhs >= out.gap_rhs;
  return out;
}

/// k < λ + μ + 2, the constraint one level below the top quotient.
inline bool deep_gap_holds(const SrgParams& p) {
  if (!is_valid_srg(p)) throw PreconditionError("deep_gap_holds: invalid parameters " + p.to_string());
  return p.k < p.lambda + p.mu + 2;
}

struct ArrayFeasibility {
  bool feasible = false;
  std::vector<std::string> reasons;  // empty when feasible
  std::optional<std::vector<std::int64_t>> layer_sizes;
  std::optional<std::int64_t> vertices;
};

/// Basic feasibility: every k_i a positive integer and every a_i ≥ 0.
inline ArrayFeasibility array_feasible(const IntersectionArray& a) {
  ArrayFeasibility out;
  out.layer_sizes = a.layer_sizes();
  if (!out.layer_sizes) out.reasons.push_back("some k_i = k_{i-1} b_{i-1} / c_i is not an integer");
  for (std::size_t i = 0; i <= a.diameter(); ++i)
    if (a.a_at(i) < 0) out.reasons.push_back("a_" + std::to_string(i) + " = " + std::to_string(a.a_at(i)) + " < 0");
  if (out.layer_sizes) out.vertices = a.vertex_count();
  out.feasible = out.reasons.empty();
  return out;
}

/// The Moore-graph degrees allowed by the eigenvalue argument.
inline bool is_moore_degree(std::int64_t r) { return r == 2 || r == 3 || r == 7 || r == 57; }

// -- descent scan ------------------------------------------------------------

/// levels[0] is the top quotient Δ (the local graph modulo twins) and each
/// later level is the local quotient of the one before; the last level has
/// μ = 1 and is described by `root`.
struct Tower {
  HostParams top;
  std::vector<LocalQuotient> levels;
  FsrParams root;
  std::vector<Integer> c_roots;  // admissible integral roots of the equality quadratic at levels[0]
  std::size_t height() const { return levels.size(); }
  friend bool operator==(const Tower&, const Tower&) = default;
};

enum class ScanRejection {
  NoAdmissibleRoot,       // equality quadratic has no integral root ≥ 2 (or no real root)
  GapFails,               // (μ̄/2 - (k̄+1))^2 < 2k̄(k̄-λ̄-1)
  NotFsr,                 // μ = 1 level is not of F(s,r) shape
  FsrRejected,            // s + 1 > r
  FsrTooLarge,            // rs ≥ 2(s+1) when the top quotient already has μ = 1
  MuNotBelowK,            // μ̄ ≥ k̄ at a μ̄ > 1 level
  HalfDegreeFails,        // k̄ > 2(λ̄+1) at the top quotient when μ̄ > 1
  DeepGapFails,           // k_1 ≥ λ_1 + μ_1 + 2 one level down
  GapPropagation,         // root with s_h > 1: k-λ-μ > 1 propagates up and contradicts the deep gap
  MooreDiameter,          // Moore root of degree 2 or 3 beneath a level that must have diameter 2
  MooreEigenvalues,       // Moore root of degree 7 or 57: the level above fails integrality
  NotMooreDegree,         // Moore root whose degree is not 2, 3, 7 or 57
  DeeperGapFails,         // optional stricter pruning: the gap inequality fails below the top
};

inline const char* to_string(ScanRejection r) {
  switch (r) {
    case ScanRejection::NoAdmissibleRoot: return "no integral root >= 2 of the equality quadratic";
    case ScanRejection::GapFails: return "quotient gap inequality fails";
    case ScanRejection::NotFsr: return "mu = 1 level is not in F(s,r)";
    case ScanRejection::FsrRejected: return "F(s,r) with s + 1 > r";
    case ScanRejection::FsrTooLarge: return "rs >= 2(s+1)";
    case ScanRejection::MuNotBelowK: return "mu_bar >= k_bar";
    case ScanRejection::HalfDegreeFails: return "k_bar > 2(lambda_bar + 1)";
    case ScanRejection::DeepGapFails: return "k_1 >= lambda_1 + mu_1 + 2";
    case ScanRejection::GapPropagation: return "root with s > 1 forces k - lambda - mu > 1 on every level";
    case ScanRejection::MooreDiameter: return "locally pentagon/Petersen graphs have diameter >= 3";
    case ScanRejection::MooreEigenvalues: return "locally Moore level of degree 7/57 fails eigenvalue integrality";
    case ScanRejection::NotMooreDegree: return "Moore graph degree not in {2,3,7,57}";
    case ScanRejection::DeeperGapFails: return "gap inequality fails below the top quotient";
  }
  return "";
}

struct RejectedTower {
  Tower tower;
  ScanRejection reason{};
};

struct ScanOptions {
  bool gap_at_every_level = false;  // also require the quotient gap inequality below the top
  unsigned workers = worker_count();
};

struct ScanResult {
  std::vector<Tower> survivors;         // sorted by top (k, λ, μ)
  std::vector<RejectedTower> rejected;  // every complete descent chain that was pruned, same order
  std::size_t candidates = 0;           // (k, λ, μ) triples examined
};

namespace detail {

/// Every descent chain below `p` ending at a μ = 1 level. A chain whose μ = 1
/// level is not of F(s,r) shape is returned with an empty root (s = r = 0).
inline void chains_below(const SrgParams& p, std::vector<LocalQuotient>& prefix,
                         std::vector<std::vector<LocalQuotient>>& out) {
  if (p.mu == 1) {
    out.push_back(prefix);
    return;
  }
  for (auto& q : local_quotients(HostParams{p.k, p.lambda, p.mu})) {
    prefix.push_back(q);
    chains_below(q.quotient, prefix, out);
    prefix.pop_back();
  }
}

inline std::optional<ScanRejection> judge(Tower& t, const ScanOptions& options) {
  const SrgParams& delta = t.levels.front().quotient;
  const auto quad = equality_quadratic(delta);
  t.c_roots = quad.admissible_roots;
  if (!quad.gap_holds) return ScanRejection::GapFails;
  if (quad.admissible_roots.empty()) return ScanRejection::NoAdmissibleRoot;

  const SrgParams& last = t.levels.back().quotient;
  const auto shape = fsr_shape_of(last);
  if (!shape) return ScanRejection::NotFsr;
  const auto fsr = fsr_params(shape->s, shape->r);
  if (!fsr) return ScanRejection::FsrRejected;
  t.root = *fsr;

  if (t.height() == 1) {
    if (!(Integer(t.root.r) * t.root.s < 2 * (Integer(t.root.s) + 1))) return ScanRejection::FsrTooLarge;
    if (!is_moore_degree(t.root.r)) return ScanRejection::NotMooreDegree;
    return std::nullopt;
  }

  for (std::size_t i = 0; i + 1 < t.height(); ++i)
    if (t.levels[i].quotient.mu >= t.levels[i].quotient.k) return ScanRejection::MuNotBelowK;
  if (delta.k > 2 * (delta.lambda + 1)) return ScanRejection::HalfDegreeFails;
  if (!deep_gap_holds(t.levels[1].quotient)) return ScanRejection::DeepGapFails;
  if (options.gap_at_every_level)
    for (std::size_t i = 1; i < t.height(); ++i)
      if (!equality_quadratic(t.levels[i].quotient).gap_holds) return ScanRejection::DeeperGapFails;

  if (t.root.s > 1) return ScanRejection::GapPropagation;
  if (!is_moore_degree(t.root.r)) return ScanRejection::NotMooreDegree;
  const auto& parent = t.levels[t.height() - 2].quotient;
  if (t.root.r == 2 || t.root.r == 3) return ScanRejection::MooreDiameter;
  if (!eigenvalue_feasible(parent).feasible) return ScanRejection::MooreEigenvalues;
  return std::nullopt;
}

}  // namespace detail

/// Scans every (k, λ, μ) with k ≤ max_k, 0 ≤ λ < k, 2 ≤ μ ≤ k through every
/// descent chain and applies the necessary conditions for equality in the
/// coclique bound. Survivors are parameter-feasible only; nothing is claimed
/// about existence of a graph.
inline ScanResult tower_scan(std::int64_t max_k, const ScanOptions& options = {}) {
  ScanResult result;
  if (max_k < 1) return result;
  struct Slot {
    std::vector<Tower> survivors;
    std::vector<RejectedTower> rejected;
    std::size_t candidates = 0;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(max_k));
  parallel_for(slots.size(), [&](std::size_t index) {
    const std::int64_t k = static_cast<std::int64_t>(index) + 1;
    Slot& slot = slots[index];
    for (std::int64_t lambda = 0; lambda < k; ++lambda)
      for (std::int64_t mu = 2; mu <= k; ++mu) {
        ++slot.candidates;
        const HostParams top{k, lambda, mu};
        for (auto& first : local_quotients(top)) {
          std::vector<LocalQuotient> prefix{first};
          std::vector<std::vector<LocalQuotient>> chains;
          detail::chains_below(first.quotient, prefix, chains);
          for (auto& chain : chains) {
            Tower t{top, std::move(chain), FsrParams{}, {}};
            if (auto reason = detail::judge(t, options))
              slot.rejected.push_back({std::move(t), *reason});
            else
              slot.survivors.push_back(std::move(t));
          }
        }
      }
  }, options.workers);

  for (auto& slot : slots) {
    result.candidates += slot.candidates;
    for (auto& t : slot.survivors) result.survivors.push_back(std::move(t));
    for (auto& r : slot.rejected) result.rejected.push_back(std::move(r));
  }
  return result;
}

}  // namespace drgtk
