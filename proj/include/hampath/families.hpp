#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/hpc.hpp"
#include "hampath/ratio.hpp"

namespace hampath {

/// Outer 5-cycle 0..4, inner pentagram 5..9 (i+5 -- (i+2)%5+5), spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
    pairs.emplace_back(i, i + 5);
  }
  return from_edge_list(10, pairs);
}

/// K_m on 0..m-1 with a path m-1, m, ..., n-1 hanging off v = m-1; the far
/// end of the path is w = n-1.
inline Graph figure1(int m, int n) {
  if (m < 3 || n <= m)
    throw Error(ErrorKind::DomainError, "figure1 needs m >= 3 and n > m (got m=" + std::to_string(m) +
                                            ", n=" + std::to_string(n) + ")");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
  for (Vertex a = m - 1; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
  return from_edge_list(n, pairs);
}

/// Cubic graph of order 2n: the cycle 0..2n-1 plus, for each block
/// i = 0..n/3-1, the chords (3i, 3i+n), (3i+1, 3i+n+2), (3i+2, 3i+n+1).
inline Graph gamma(int n) {
  if (n < 3 || n % 3 != 0)
    throw Error(ErrorKind::DomainError, "gamma needs a positive multiple of 3, got " + std::to_string(n));
  const int order = 2 * n;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 0; j < order; ++j) pairs.emplace_back(j, (j + 1) % order);
  for (int i = 0; i < n / 3; ++i) {
    pairs.emplace_back(3 * i, (3 * i + n) % order);
    pairs.emplace_back(3 * i + 1, (3 * i + n + 2) % order);
    pairs.emplace_back(3 * i + 2, (3 * i + n + 1) % order);
  }
  return from_edge_list(order, pairs);
}

struct AttachmentSpec {
  Graph base;
  HpcCandidate edge_set;
  int clique_size = 1;
};

/// Hangs a fresh K_k on each listed edge (v_i, w_i): every clique vertex is
/// joined to v_i and w_i. Clique i occupies m + i*k .. m + (i+1)*k - 1.
inline Graph attach_cliques(const AttachmentSpec& spec) {
  const int k = spec.clique_size;
  if (k < 1) throw Error(ErrorKind::DomainError, "clique size must be at least 1");
  validate_candidate(spec.base, spec.edge_set);
  if (!spec.edge_set.pairwise_disjoint())
    throw Error(ErrorKind::EdgesNotDisjoint, "attachment edges must be pairwise vertex-disjoint");

  const int m = spec.base.order();
  const int s = static_cast<int>(spec.edge_set.size());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : spec.base.edges()) pairs.emplace_back(e.u, e.v);
  for (int i = 0; i < s; ++i) {
    const auto& d = spec.edge_set.edges[static_cast<std::size_t>(i)];
    const Vertex first = m + i * k;
    for (Vertex a = first; a < first + k; ++a) {
      pairs.emplace_back(a, d.v);
      pairs.emplace_back(a, d.w);
      for (Vertex b = a + 1; b < first + k; ++b) pairs.emplace_back(a, b);
    }
  }
  return from_edge_list(m + s * k, pairs);
}

/// Lower bound s(s-1)k^2 / ((m+sk)(m-1+sk)) on the pair connected ratio of
/// the clique-attachment graph, counting only clique-to-clique pairs.
inline Ratio gk_lower_bound(std::int64_t s, std::int64_t m, std::int64_t k) {
  if (s < 2 || k < 1 || m < 2 * s)
    throw Error(ErrorKind::DomainError, "gk_lower_bound needs s >= 2, m >= 2s, k >= 1");
  const std::int64_t order = m + s * k;
  return Ratio(s * (s - 1) * k * k, order * (order - 1));
}

/// Closed form for the Petersen-based family: 4((10+5k)^2 - 25) / (5(9+5k)(10+5k)).
inline Ratio pk_exact_ratio(std::int64_t k) {
  if (k < 0) throw Error(ErrorKind::DomainError, "k must be non-negative");
  const std::int64_t a = 10 + 5 * k;
  return Ratio(4 * (a * a - 25), 5 * (9 + 5 * k) * a);
}

/// Lexicographically least perfect matching of g certified H-path connected.
inline std::optional<HpcCertificate> least_certified_matching(
    const Graph& g, WitnessRule rule = WitnessRule::AvoidEndEdges) {
  HpcVerifier verifier(g, 0, rule);
  for (const auto& mm : perfect_matchings(g)) {
    if (mm.size() < 2) continue;
    auto out = verifier.verify(HpcCandidate::from_edges(mm));
    if (out.certificate) return out.certificate;
  }
  return std::nullopt;
}

}  // namespace hampath
