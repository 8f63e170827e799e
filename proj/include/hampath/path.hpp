#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hampath/graph.hpp"

namespace hampath {

/// Vertex sequence in a host graph. Validity is checked against a graph on
/// demand rather than on construction, so witnesses can be re-validated
/// independently of whoever produced them.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  bool uses_edge(const Edge& e) const {
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k)
      if (Edge(vertices[k], vertices[k + 1]) == e) return true;
    return false;
  }

  Path reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Distinct vertices, consecutive ones adjacent.
inline bool is_path_in(const Graph& g, const Path& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    Vertex v = p.vertices[k];
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (k > 0 && !g.adjacent(p.vertices[k - 1], v)) return false;
  }
  return true;
}

inline bool is_hamiltonian_path(const Graph& g, const Path& p) {
  return static_cast<int>(p.length()) == g.order() && is_path_in(g, p);
}

/// A hamiltonian cycle is reported as its n vertices in order; the closing
/// edge back() -- front() is implied.
inline bool is_hamiltonian_cycle(const Graph& g, const Path& p) {
  return g.order() >= 3 && is_hamiltonian_path(g, p) && g.adjacent(p.back(), p.front());
}

/// Symmetric relation on unordered vertex pairs; the diagonal is never set.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n > kMaxSolverOrder) throw Error(ErrorKind::TooLarge, "pair table limited to 64 vertices");
  }

  int order() const { return n_; }

  bool connected(Vertex u, Vertex v) const {
    check(u, v);
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1;
  }

  void set(Vertex u, Vertex v, bool value = true) {
    check(u, v);
    if (u == v) throw Error(ErrorKind::SameVertex, "diagonal of a pair table is excluded");
    if (value) {
      rows_[static_cast<std::size_t>(u)] |= bit(v);
      rows_[static_cast<std::size_t>(v)] |= bit(u);
    } else {
      rows_[static_cast<std::size_t>(u)] &= ~bit(v);
      rows_[static_cast<std::size_t>(v)] &= ~bit(u);
    }
  }

  /// Partners of u as a bitmask.
  VertexMask row(Vertex u) const { return rows_.at(static_cast<std::size_t>(u)); }

  /// Number of connected unordered pairs.
  std::size_t count() const {
    std::size_t total = 0;
    for (VertexMask r : rows_) total += static_cast<std::size_t>(std::popcount(r));
    return total / 2;
  }

  std::vector<Edge> pairs() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (connected(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  void check(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error(ErrorKind::OutOfRange, "pair outside table");
  }

  int n_ = 0;
  std::vector<VertexMask> rows_;
};

}  // namespace hampath
