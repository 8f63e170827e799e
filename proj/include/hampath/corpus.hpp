#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/ham.hpp"

namespace hampath {

/// G(n, p) with a caller-supplied engine.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  return from_edge_list(n, pairs);
}

struct CorpusSpec {
  std::size_t count = 500;
  std::uint64_t seed = 1;
  int min_order = 5;
  int max_order = 12;
  double min_density = 0.25;
  double max_density = 0.75;
  bool connected_only = true;
};

/// Seeded sample of connected nonhamiltonian graphs. The same spec always
/// yields the same graphs in the same order.
inline std::vector<Graph> nonhamiltonian_corpus(const CorpusSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> order(spec.min_order, spec.max_order);
  std::uniform_real_distribution<double> density(spec.min_density, spec.max_density);
  std::vector<Graph> out;
  out.reserve(spec.count);
  while (out.size() < spec.count) {
    int n = order(rng);
    Graph g = random_graph(n, density(rng), rng);
    if (spec.connected_only && !is_connected(g)) continue;
    if (n >= 3 && has_ham_cycle(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hampath
