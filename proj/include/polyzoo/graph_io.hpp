#ifndef POLYZOO_GRAPH_IO_HPP
#define POLYZOO_GRAPH_IO_HPP

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polyzoo/core.hpp"
#include "polyzoo/graph.hpp"

namespace polyzoo {

namespace detail {

inline std::uint64_t parse_count_token(std::string_view tok, const char* what) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(std::string(what) + " must be nonnegative, got '" + std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string(what) + ": not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

/// Reads "n" followed by whitespace-separated endpoint pairs "u v".
/// A repeated pair raises that edge's multiplicity.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw ParseError("edge list is empty; expected vertex count");
  const auto n = detail::parse_count_token(tok, "vertex count");
  std::vector<Vertex> ends;
  while (in >> tok) {
    const auto x = detail::parse_count_token(tok, "endpoint");
    if (x >= n) {
      throw ParseError("endpoint " + std::to_string(x) + " out of range for " +
                       std::to_string(n) + " vertices");
    }
    ends.push_back(static_cast<Vertex>(x));
  }
  if (ends.size() % 2 != 0) throw ParseError("edge list has a dangling endpoint");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); i += 2) edges.push_back({ends[i], ends[i + 1]});
  return Graph(n, std::move(edges));
}

/// Inverse of parse_edge_list: the vertex count line, then one line per occurrence.
inline std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// Decodes one graph6 line (simple graphs, upper triangle packed column by column).
inline Graph parse_graph6(std::string_view line) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty string");
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: character outside the alphabet at offset " + std::to_string(i), i);
    }
  }
  auto six = [&](std::size_t i) { return static_cast<std::uint64_t>(line[i] - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = six(0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("graph6: truncated size field");
    n = (six(1) << 12) | (six(2) << 6) | six(3);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(i);
    pos = 8;
  }
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(line.size() - pos));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = six(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const auto pad_mask = (std::uint64_t{1} << (6 - bits % 6)) - 1;
    if (six(line.size() - 1) & pad_mask) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  if (!g.is_simple()) throw std::invalid_argument("graph6 encodes simple graphs only");
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const std::uint64_t bits = n * (n - (n > 0)) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const auto& e : g.edges()) {
    // column-major position of (u, v) with u < v
    const std::uint64_t k = static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(b + 63));
  return out;
}

}  // namespace polyzoo

#endif  // POLYZOO_GRAPH_IO_HPP
