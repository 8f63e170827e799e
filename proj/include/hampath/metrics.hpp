#pragma once

#include <cstdint>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/ham.hpp"
#include "hampath/ratio.hpp"

namespace hampath {

struct Classification {
  bool hamiltonian = false;
  bool homogeneously_traceable = false;
  bool hamiltonian_connected = false;
  bool hypohamiltonian = false;
  bool almost_hypohamiltonian = false;
  /// Vertices v with G - v nonhamiltonian.
  std::vector<Vertex> exceptional_vertices;
  /// Vertices that are an endpoint of some hamiltonian path.
  std::vector<Vertex> traceable_starts;
  /// The table the path predicates were read from.
  PairTable pairs;
};

/// Largest k for which g is k-pair-strung.
inline std::size_t pair_strung_count(const Graph& g, const SolverOptions& opt = {}) {
  return ham_pair_table(g, opt).count();
}

inline std::int64_t pairs_of(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

inline Ratio pair_connected_ratio(const Graph& g, const SolverOptions& opt = {}) {
  if (g.order() < 2) throw Error(ErrorKind::TooSmall, "pair connected ratio needs at least 2 vertices");
  detail::require_solver_order(g);
  return Ratio(static_cast<std::int64_t>(pair_strung_count(g, opt)), pairs_of(g.order()));
}

/// (n-2)/n, the ceiling on r_G for nonhamiltonian graphs of order n > 3.
inline Ratio theorem2_bound(int n) {
  if (n <= 3) throw Error(ErrorKind::DomainError, "bound holds for n > 3 only");
  return Ratio(n - 2, n);
}

/// Pair count equivalent of theorem2_bound: (n-1)(n-2)/2.
inline std::int64_t theorem2_pair_bound(int n) {
  if (n <= 3) throw Error(ErrorKind::DomainError, "bound holds for n > 3 only");
  return static_cast<std::int64_t>(n - 1) * (n - 2) / 2;
}

inline Classification classify(const Graph& g, const SolverOptions& opt = {}) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorKind::TooSmall, "classification needs at least 3 vertices");
  detail::require_solver_order(g);

  Classification c;
  c.pairs = ham_pair_table(g, opt);
  c.hamiltonian = has_ham_cycle(g, opt);
  c.hamiltonian_connected = static_cast<std::int64_t>(c.pairs.count()) == pairs_of(n);
  for (Vertex v = 0; v < n; ++v)
    if (c.pairs.row(v) != 0) c.traceable_starts.push_back(v);
  c.homogeneously_traceable = static_cast<int>(c.traceable_starts.size()) == n;

  for (Vertex v = 0; v < n; ++v) {
    Graph sub = delete_vertex(g, v);
    bool ham = sub.order() >= 3 && has_ham_cycle(sub, opt);
    if (!ham) c.exceptional_vertices.push_back(v);
  }
  c.hypohamiltonian = !c.hamiltonian && c.exceptional_vertices.empty();
  c.almost_hypohamiltonian = !c.hamiltonian && c.exceptional_vertices.size() == 1;
  return c;
}

struct MoonCheck {
  bool min_degree_ok = false;
  bool edge_bound_ok = false;
  std::vector<Vertex> violating_vertices;

  bool passed() const { return min_degree_ok && edge_bound_ok; }
};

/// Necessary conditions for hamiltonian-connectedness on n > 3 vertices:
/// minimum degree 3 and at least ceil(3n/2) edges.
inline MoonCheck moon_check(const Graph& g) {
  const int n = g.order();
  if (n <= 3) throw Error(ErrorKind::DomainError, "degree bound applies for n > 3 only");
  MoonCheck m;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) <= 2) m.violating_vertices.push_back(v);
  m.min_degree_ok = m.violating_vertices.empty();
  m.edge_bound_ok = static_cast<std::int64_t>(g.size()) >= (3 * static_cast<std::int64_t>(n) + 1) / 2;
  return m;
}

}  // namespace hampath
