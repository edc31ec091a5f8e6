#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drgtk/distance.hpp"
#include "drgtk/graph.hpp"
#include "drgtk/outcome.hpp"

namespace drgtk {

/// {b_0..b_{d-1}; c_1..c_d}. Construction checks the shape (equal lengths,
/// positive entries, c_1 = 1); integrality of the layer sizes and a_i >= 0 are
/// checked by layer_sizes() and array_feasible().
class IntersectionArray {
 public:
  IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c) : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || b_.size() != c_.size())
      throw PreconditionError("intersection array needs d >= 1 entries in each half");
    for (auto x : b_)
      if (x <= 0) throw PreconditionError("intersection array: b_i must be positive");
    for (auto x : c_)
      if (x <= 0) throw PreconditionError("intersection array: c_i must be positive");
    if (c_.front() != 1) throw PreconditionError("intersection array: c_1 must be 1");
  }

  /// Parses "{5,2,1;1,2,5}" (braces and whitespace optional).
  static IntersectionArray parse(const std::string& text) {
    std::vector<std::int64_t> halves[2];
    int half = 0;
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      try {
        halves[half].push_back(std::stoll(token));
      } catch (const std::exception&) {
        throw PreconditionError("intersection array: bad entry '" + token + "'");
      }
      token.clear();
    };
    for (char ch : text) {
      if (ch == '{' || ch == '}' || ch == ' ' || ch == '\t') continue;
      if (ch == ',') {
        flush();
      } else if (ch == ';') {
        flush();
        if (++half > 1) throw PreconditionError("intersection array: more than one ';'");
      } else {
        token.push_back(ch);
      }
    }
    flush();
    if (half != 1) throw PreconditionError("intersection array: expected 'b...;c...'");
    return IntersectionArray(std::move(halves[0]), std::move(halves[1]));
  }

  std::size_t diameter() const { return b_.size(); }
  std::int64_t valency() const { return b_.front(); }
  const std::vector<std::int64_t>& b() const { return b_; }
  const std::vector<std::int64_t>& c() const { return c_; }

  /// b_i with b_d = 0
  std::int64_t b_at(std::size_t i) const { return i < b_.size() ? b_[i] : 0; }
  /// c_i with c_0 = 0
  std::int64_t c_at(std::size_t i) const { return i == 0 ? 0 : c_[i - 1]; }
  std::int64_t a_at(std::size_t i) const { return valency() - b_at(i) - c_at(i); }

  /// k_0..k_d, or nullopt when some k_i is not an integer.
  std::optional<std::vector<std::int64_t>> layer_sizes() const {
    std::vector<std::int64_t> k{1};
    for (std::size_t i = 1; i <= diameter(); ++i) {
      std::int64_t num = k.back() * b_at(i - 1);
      if (num % c_at(i) != 0) return std::nullopt;
      k.push_back(num / c_at(i));
    }
    return k;
  }

  std::optional<std::int64_t> vertex_count() const {
    auto k = layer_sizes();
    if (!k) return std::nullopt;
    std::int64_t v = 0;
    for (auto x : *k) v += x;
    return v;
  }

  std::string to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < b_.size(); ++i) out << (i ? "," : "") << b_[i];
    out << ';';
    for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? "," : "") << c_[i];
    out << '}';
    return out.str();
  }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
};

/// First (u, w) in lexicographic order whose counts disagree with the
/// values fixed by earlier pairs at the same distance.
struct DistanceRegularityWitness {
  Vertex u = 0;
  Vertex w = 0;
  std::uint32_t distance = 0;
  std::int64_t expected_c = 0, found_c = 0;
  std::int64_t expected_b = 0, found_b = 0;
};

/// Throws PreconditionError on a disconnected (or empty) graph.
inline Outcome<IntersectionArray, DistanceRegularityWitness> intersection_array(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("intersection_array: empty graph");
  const DistanceMatrix dist(g);
  if (!dist.connected()) throw PreconditionError("intersection_array: graph is disconnected");
  const std::uint32_t d = dist.diameter();
  if (d == 0) throw PreconditionError("intersection_array: single vertex has no intersection array");

  std::vector<std::optional<std::pair<std::int64_t, std::int64_t>>> seen(d + 1);  // (c_i, b_i)
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = 0; w < g.order(); ++w) {
      const std::uint32_t i = dist(u, w);
      std::int64_t inward = 0, outward = 0;
      g.neighbors(w).for_each([&](std::size_t x) {
        if (dist(u, x) + 1 == i) ++inward;
        if (dist(u, x) == i + 1) ++outward;
      });
      if (!seen[i]) {
        seen[i] = std::pair{inward, outward};
      } else if (seen[i]->first != inward || seen[i]->second != outward) {
        return DistanceRegularityWitness{u, w, i, seen[i]->first, inward, seen[i]->second, outward};
      }
    }
  }
  std::vector<std::int64_t> b, c;
  for (std::uint32_t i = 0; i < d; ++i) b.push_back(seen[i]->second);
  for (std::uint32_t i = 1; i <= d; ++i) c.push_back(seen[i]->first);
  return IntersectionArray(std::move(b), std::move(c));
}

struct AmplyRegularParams {
  std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const AmplyRegularParams&, const AmplyRegularParams&) = default;
};

struct AmplyRegularFailure {
  enum class Condition { NotRegular, LambdaNotConstant, MuNotConstant };
  Condition condition{};
  Vertex u = 0;
  Vertex w = 0;  // for NotRegular, w is a vertex whose degree differs from u's
  std::int64_t expected = 0;
  std::int64_t found = 0;

  std::string describe() const {
    switch (condition) {
      case Condition::NotRegular:
        return "not regular: deg(" + std::to_string(u) + ")=" + std::to_string(expected) + " but deg(" +
               std::to_string(w) + ")=" + std::to_string(found);
      case Condition::LambdaNotConstant:
        return "lambda not constant: edge (" + std::to_string(u) + "," + std::to_string(w) + ") has " +
               std::to_string(found) + " common neighbours, expected " + std::to_string(expected);
      case Condition::MuNotConstant:
        return "mu not well-defined: pair (" + std::to_string(u) + "," + std::to_string(w) + ") has " +
               std::to_string(found) + " common neighbours, expected " + std::to_string(expected);
    }
    return {};
  }
};

namespace detail {

inline void require_connected_noncomplete(const Graph& g, const char* op) {
  if (g.order() == 0) throw PreconditionError(std::string(op) + ": empty graph");
  if (g.is_complete()) throw PreconditionError(std::string(op) + ": graph is complete");
  if (!DistanceMatrix(g).connected()) throw PreconditionError(std::string(op) + ": graph is disconnected");
}

/// First distance-2 pair (u < w) whose common-neighbour count differs from
/// the first such pair's count. Returns the common count in `mu` when none.
inline std::optional<AmplyRegularFailure> scan_mu(const Graph& g, std::optional<std::int64_t>& mu) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex w = u + 1; w < g.order(); ++w) {
      if (g.adjacent(u, w)) continue;
      auto common = static_cast<std::int64_t>(g.common_neighbor_count(u, w));
      if (common == 0) continue;
      if (!mu) {
        mu = common;
      } else if (*mu != common) {
        return AmplyRegularFailure{AmplyRegularFailure::Condition::MuNotConstant, u, w, *mu, common};
      }
    }
  return std::nullopt;
}

}  // namespace detail

/// (v,k,λ,μ) when g is regular, λ is constant on edges and μ is constant on
/// distance-2 pairs. Requires a connected noncomplete graph.
inline Outcome<AmplyRegularParams, AmplyRegularFailure> amply_regular_params(const Graph& g) {
  detail::require_connected_noncomplete(g, "amply_regular_params");
  using C = AmplyRegularFailure::Condition;
  const auto k = static_cast<std::int64_t>(g.degree(0));
  for (Vertex u = 1; u < g.order(); ++u)
    if (static_cast<std::int64_t>(g.degree(u)) != k)
      return AmplyRegularFailure{C::NotRegular, 0, u, k, static_cast<std::int64_t>(g.degree(u))};

  std::optional<std::int64_t> lambda;
  for (const auto& [u, w] : g.edges()) {
    auto common = static_cast<std::int64_t>(g.common_neighbor_count(u, w));
    if (!lambda) {
      lambda = common;
    } else if (*lambda != common) {
      return AmplyRegularFailure{C::LambdaNotConstant, u, w, *lambda, common};
    }
  }
  std::optional<std::int64_t> mu;
  if (auto failure = detail::scan_mu(g, mu)) return *failure;
  return AmplyRegularParams{static_cast<std::int64_t>(g.order()), k, lambda.value_or(0), mu.value_or(0)};
}

}  // namespace drgtk
