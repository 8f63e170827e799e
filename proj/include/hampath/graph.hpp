#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hampath/error.hpp"

namespace hampath {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Largest order the exact solvers accept (one bit per vertex in a word).
inline constexpr int kMaxSolverOrder = 64;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool has(Vertex x) const { return x == u || x == v; }
  constexpr bool touches(const Edge& o) const { return has(o.u) || has(o.v); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// "mutating" helper returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw Error(ErrorKind::OutOfRange, "negative vertex count");
    if (n <= kMaxSolverOrder) masks_.assign(static_cast<std::size_t>(n), 0);
  }

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Sorted, de-duplicated edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_bitmasks() const { return n_ <= kMaxSolverOrder; }

  VertexMask neighbor_mask(Vertex v) const {
    check_vertex(v);
    if (!has_bitmasks())
      throw Error(ErrorKind::TooLarge, "graph of order " + std::to_string(n_) +
                                           " has no bitmask adjacency");
    return masks_[static_cast<std::size_t>(v)];
  }

  /// Mask with one bit per vertex; only meaningful when has_bitmasks().
  VertexMask all_vertices() const {
    return n_ >= 64 ? ~VertexMask{0} : bit(n_) - 1;
  }

  bool adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (has_bitmasks()) return (masks_[static_cast<std::size_t>(a)] & bit(b)) != 0;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  bool has_edge(const Edge& e) const {
    return e.u != e.v && e.u >= 0 && e.v < n_ && adjacent(e.u, e.v);
  }

  int min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
  }

  int max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
      throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v) +
                                             " outside 0.." + std::to_string(n_ - 1));
  }

 private:
  friend Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> masks_;
};

/// Builds a graph from arbitrary vertex pairs; duplicates collapse and input
/// order is irrelevant.
inline Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  Graph g(n);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(a) + "," +
                                             std::to_string(b) + ") outside order " +
                                             std::to_string(n));
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    if (g.has_bitmasks()) {
      g.masks_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      g.masks_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  g.edges_ = std::move(edges);
  return g;
}

inline Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

inline Graph from_edges(int n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edge_list(n, pairs);
}

/// Order n-1; vertices above v shift down by one.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    if (e.has(v)) continue;
    pairs.emplace_back(e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v);
  }
  return from_edge_list(g.order() - 1, pairs);
}

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

/// Bijection on 0..n-1.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Vertex> mapping) : map_(std::move(mapping)) {
    std::vector<char> seen(map_.size(), 0);
    for (Vertex x : map_) {
      if (x < 0 || static_cast<std::size_t>(x) >= map_.size() || seen[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::NotPermutation, "mapping is not a bijection");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }

  static VertexPermutation identity(int n) {
    std::vector<Vertex> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return VertexPermutation(std::move(m));
  }

  /// j -> j + shift (mod n).
  static VertexPermutation rotation(int n, int shift) {
    std::vector<Vertex> m(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j)] = ((j + shift) % n + n) % n;
    return VertexPermutation(std::move(m));
  }

  int size() const { return static_cast<int>(map_.size()); }
  Vertex operator()(Vertex v) const { return map_.at(static_cast<std::size_t>(v)); }
  const std::vector<Vertex>& mapping() const { return map_; }

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> map_;
};

/// (p ∘ q)(v) = p(q(v)).
inline VertexPermutation compose(const VertexPermutation& p, const VertexPermutation& q) {
  if (p.size() != q.size())
    throw Error(ErrorKind::LengthMismatch, "composing permutations of different length");
  std::vector<Vertex> m(static_cast<std::size_t>(p.size()));
  for (int v = 0; v < p.size(); ++v) m[static_cast<std::size_t>(v)] = p(q(v));
  return VertexPermutation(std::move(m));
}

inline bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.order())
    throw Error(ErrorKind::LengthMismatch, "permutation length " + std::to_string(p.size()) +
                                               " != order " + std::to_string(g.order()));
  // A bijection maps E into E iff it maps E onto E (finite, same size).
  for (const Edge& e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  return true;
}

// Small named graphs used throughout the tests and the CLI.

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return from_edge_list(n, pairs);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a) pairs.emplace_back(a, (a + 1) % n);
  return from_edge_list(n, pairs);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return from_edge_list(n, pairs);
}

}  // namespace hampath
