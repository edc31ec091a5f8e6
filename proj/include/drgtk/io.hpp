#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "drgtk/graph.hpp"

namespace drgtk {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = trim(line);
    if (!t.empty()) lines.emplace_back(t);
  }
  return lines;
}

inline bool parse_two(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream in(line);
  long long x = 0, y = 0;
  std::string rest;
  if (!(in >> x >> y) || (in >> rest) || x < 0 || y < 0) return false;
  a = static_cast<std::uint64_t>(x);
  b = static_cast<std::uint64_t>(y);
  return true;
}

inline bool looks_like_graph6(std::string_view s) {
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < 63 || ch > 126) return false;
  return true;
}

}  // namespace detail

/// Plain edge list: header "n m" then m lines "u v" (0-based); '#' starts a
/// comment.
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("edge list: missing header");
  std::uint64_t n = 0, m = 0;
  if (!detail::parse_two(lines[0], n, m)) throw ParseError("edge list: malformed header '" + lines[0] + "'");
  if (lines.size() - 1 != m)
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::uint64_t u = 0, w = 0;
    if (!detail::parse_two(lines[i], u, w)) throw ParseError("edge list: malformed edge line '" + lines[i] + "'");
    if (u >= n || w >= n) throw ParseError("edge list: index out of range in '" + lines[i] + "'");
    if (u == w) throw ParseError("edge list: loop edge in '" + lines[i] + "'");
    edges.emplace_back(u, w);
  }
  return Graph::from_edge_list(n, edges);
}

/// Canonical edge-list serialization (edges sorted, u < w).
inline std::string to_edge_list(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, w] : edges) out << u << ' ' << w << '\n';
  return out.str();
}

/// graph6, single graph. Read-only.
inline Graph parse_graph6(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  if (!detail::looks_like_graph6(s)) throw ParseError("graph6: invalid character");
  std::size_t pos = 0;
  auto take = [&]() -> std::uint64_t {
    if (pos >= s.size()) throw ParseError("graph6: truncated input");
    return static_cast<std::uint64_t>(s[pos++] - 63);
  };
  std::uint64_t n = take();
  if (n == 63) {
    int groups = 3;
    if (pos < s.size() && s[pos] == 126) {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (int i = 0; i < groups; ++i) n = (n << 6) | take();
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (s.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                     std::to_string(s.size() - pos));
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++bit) {
      const auto byte = static_cast<std::uint64_t>(s[pos + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  return Graph::from_edge_list(n, edges);
}

/// Detects edge list vs graph6.
inline Graph parse_graph_text(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty graph file");
  std::uint64_t a = 0, b = 0;
  if (detail::parse_two(lines[0], a, b)) return parse_edge_list(text);
  if (lines.size() == 1 && detail::looks_like_graph6(lines[0])) return parse_graph6(lines[0]);
  throw ParseError("unknown graph file format");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

inline void write_edge_list_file(const std::string& path, const Graph& g, std::string_view comment = {}) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << to_edge_list(g, comment);
}

}  // namespace drgtk
