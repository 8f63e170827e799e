#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hampath/graph.hpp"

namespace hampath {

namespace graph6_detail {

inline constexpr int kBias = 63;

inline void put_order(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

inline int sextet(char c) {
  int x = static_cast<unsigned char>(c);
  if (x < 63 || x > 126)
    throw Error(ErrorKind::MalformedGraph6, "byte " + std::to_string(x) + " outside 63..126");
  return x - kBias;
}

}  // namespace graph6_detail

/// Standard graph6 encoding: N(n) followed by the upper triangle of the
/// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
/// packed six bits per byte, big-endian, zero padded.
inline std::string to_graph6(const Graph& g) {
  using namespace graph6_detail;
  std::string out;
  const std::int64_t n = g.order();
  put_order(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

/// Accepts an optional ">>graph6<<" header and trailing whitespace. Nonzero
/// padding bits are rejected so that every accepted string is canonical.
inline Graph parse_graph6(std::string_view text) {
  using namespace graph6_detail;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::MalformedGraph6, "empty input");

  std::size_t pos = 0;
  std::int64_t n = 0;
  auto take = [&]() {
    if (pos >= text.size()) throw Error(ErrorKind::MalformedGraph6, "truncated order field");
    return sextet(text[pos++]);
  };
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = take();
  } else {
    ++pos;
    int digits = 3;
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
      ++pos;
      digits = 6;
    }
    for (int k = 0; k < digits; ++k) n = (n << 6) | take();
  }
  if (n > std::int64_t{1} << 20)
    throw Error(ErrorKind::MalformedGraph6, "order " + std::to_string(n) + " too large");

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t bytes = (bits + 5) / 6;
  if (static_cast<std::int64_t>(text.size() - pos) != bytes)
    throw Error(ErrorKind::MalformedGraph6, "expected " + std::to_string(bytes) +
                                                " edge bytes, found " +
                                                std::to_string(text.size() - pos));

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = sextet(text.back());
    int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0)
      throw Error(ErrorKind::MalformedGraph6, "nonzero padding bits");
  }
  for (std::size_t q = pos; q < text.size(); ++q) sextet(text[q]);
  return from_edge_list(static_cast<int>(n), pairs);
}

/// Edge-list text: first data line "n m", then m lines "u v" (0-indexed).
/// '#' starts a comment running to end of line; blank lines are ignored.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<long long> numbers;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedEdgeList, "non-integer token '" + tok + "'");
      }
      if (used != tok.size())
        throw Error(ErrorKind::MalformedEdgeList, "non-integer token '" + tok + "'");
      numbers.push_back(x);
    }
  }
  if (numbers.size() < 2) throw Error(ErrorKind::MalformedEdgeList, "missing 'n m' header");
  const long long n = numbers[0];
  const long long m = numbers[1];
  if (n < 0 || m < 0 || n > (1 << 20))
    throw Error(ErrorKind::MalformedEdgeList, "bad header values");
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m)
    throw Error(ErrorKind::MalformedEdgeList, "header announces " + std::to_string(m) +
                                                  " edges but body holds " +
                                                  std::to_string(numbers.size() - 2) + " endpoint values");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (long long k = 0; k < m; ++k) {
    long long a = numbers[static_cast<std::size_t>(2 + 2 * k)];
    long long b = numbers[static_cast<std::size_t>(3 + 2 * k)];
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                             ") outside order " + std::to_string(n));
    pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return from_edge_list(static_cast<int>(n), pairs);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// Edge-set text used for H-path candidates and matchings: one "v w" pair
/// per line, order preserved, '#' comments allowed.
inline std::vector<std::pair<Vertex, Vertex>> parse_edge_pairs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<Vertex, Vertex>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long a = 0, b = 0;
    if (!(ls >> a)) continue;
    std::string extra;
    if (!(ls >> b) || (ls >> extra))
      throw Error(ErrorKind::MalformedEdgeList, "line " + std::to_string(lineno) + ": expected 'v w'");
    out.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return out;
}

/// Reads either format: a first data line holding two integers means
/// edge-list text, anything else is taken as graph6 (first graph only).
inline Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ls(stripped);
    std::string a, b;
    if (!(ls >> a)) continue;
    auto numeric = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (ls >> b && numeric(a) && numeric(b)) return parse_edge_list(text);
    return parse_graph6(line);
  }
  throw Error(ErrorKind::MalformedEdgeList, "no graph data found");
}

}  // namespace hampath
