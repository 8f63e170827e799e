#pragma once

#include <cstdint>
#include <vector>

#include "hampath/graph.hpp"

namespace hampath {

/// Cap for the exhaustive counter.
inline constexpr int kMaxOracleOrder = 16;

namespace exhaustive_detail {

// Plain DFS with no pruning. Kept free of the engines' bitmask machinery so
// it can catch their pruning bugs.
inline std::uint64_t count_from(const Graph& g, Vertex cur, Vertex target,
                                std::vector<char>& visited, int depth) {
  if (depth == g.order()) return cur == target ? 1 : 0;
  if (cur == target) return 0;
  std::uint64_t total = 0;
  for (Vertex u : g.neighbors(cur)) {
    if (visited[static_cast<std::size_t>(u)]) continue;
    visited[static_cast<std::size_t>(u)] = 1;
    total += count_from(g, u, target, visited, depth + 1);
    visited[static_cast<std::size_t>(u)] = 0;
  }
  return total;
}

}  // namespace exhaustive_detail

/// Number of hamiltonian paths joining s and t; a path and its reversal
/// count once.
inline std::uint64_t count_ham_paths(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw Error(ErrorKind::SameVertex, "endpoints must differ");
  if (g.order() > kMaxOracleOrder)
    throw Error(ErrorKind::TooLarge, "exhaustive counter limited to " +
                                         std::to_string(kMaxOracleOrder) + " vertices");
  std::vector<char> visited(static_cast<std::size_t>(g.order()), 0);
  visited[static_cast<std::size_t>(s)] = 1;
  return exhaustive_detail::count_from(g, s, t, visited, 1);
}

}  // namespace hampath
