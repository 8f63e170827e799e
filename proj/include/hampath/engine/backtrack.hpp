#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/path.hpp"

namespace hampath::backtrack {

enum class Status { Found, Exhausted, BudgetExceeded };

struct Result {
  Status status = Status::Exhausted;
  std::optional<Path> path;
  std::uint64_t nodes = 0;
};

/// Depth-first hamiltonian path / cycle search over bitmasks.
///
/// Neighbors are tried in ascending order, so the first solution found is
/// the lexicographically least one. Pruning:
///  - degree: every unvisited vertex other than the target needs two
///    neighbors among the unvisited vertices and the open ends; the target
///    needs one;
///  - connectivity: the unvisited vertices must induce a connected subgraph
///    reachable from the current vertex;
///  - required edges: a vertex with an untraversed required edge to an
///    unvisited partner must step to that partner next, and a required
///    partner that is already visited must be the predecessor.
class Search {
 public:
  /// Path mode: hamiltonian path from s to t containing every required edge
  /// and none of the forbidden ones.
  static Search path(const Graph& g, Vertex s, Vertex t, std::span<const Edge> required,
                     std::uint64_t budget = 0, std::span<const Edge> forbidden = {}) {
    Search x(g, budget);
    for (const Edge& e : forbidden) {
      x.adj_[static_cast<std::size_t>(e.u)] &= ~bit(e.v);
      x.adj_[static_cast<std::size_t>(e.v)] &= ~bit(e.u);
    }
    x.start_ = s;
    x.target_ = t;
    x.cycle_ = false;
    x.load_required(required);
    return x;
  }

  /// Cycle mode: hamiltonian cycle read from vertex 0.
  static Search cycle(const Graph& g, std::uint64_t budget = 0) {
    Search x(g, budget);
    x.start_ = 0;
    x.target_ = -1;
    x.cycle_ = true;
    return x;
  }

  Result run() {
    Result r;
    path_.clear();
    nodes_ = 0;
    aborted_ = false;
    const int n = g_.order();
    if (!infeasible_ && !(cycle_ && n < 3) && n >= 1) {
      path_.push_back(start_);
      if (dfs(start_, bit(start_))) {
        r.status = Status::Found;
        r.path = Path{path_};
      }
    }
    r.nodes = nodes_;
    if (!r.path) r.status = aborted_ ? Status::BudgetExceeded : Status::Exhausted;
    return r;
  }

 private:
  Search(const Graph& g, std::uint64_t budget)
      : g_(g), budget_(budget), all_(g.all_vertices()), adj_(static_cast<std::size_t>(g.order())),
        req_(static_cast<std::size_t>(g.order()), 0) {
    if (g.order() > kMaxSolverOrder)
      throw Error(ErrorKind::TooLarge, "solver limited to " + std::to_string(kMaxSolverOrder) + " vertices");
    for (Vertex v = 0; v < g.order(); ++v) adj_[static_cast<std::size_t>(v)] = g.neighbor_mask(v);
  }

  void load_required(std::span<const Edge> required) {
    for (const Edge& e : required) {
      req_[static_cast<std::size_t>(e.u)] |= bit(e.v);
      req_[static_cast<std::size_t>(e.v)] |= bit(e.u);
    }
    const int n = g_.order();
    for (Vertex v = 0; v < n; ++v) {
      int k = std::popcount(req_[static_cast<std::size_t>(v)]);
      int cap = (v == start_ || v == target_) ? 1 : 2;
      if (n == 1) cap = 0;
      if (k > cap) infeasible_ = true;
    }
    if (n > 2 && (req_[static_cast<std::size_t>(start_)] >> target_) & 1) infeasible_ = true;
    for (const Edge& e : required)
      if (!((adj_[static_cast<std::size_t>(e.u)] >> e.v) & 1)) infeasible_ = true;
  }

  VertexMask reach_within(VertexMask seed, VertexMask allowed) const {
    VertexMask seen = seed;
    VertexMask frontier = seed;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1)
        next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool prune(Vertex cur, VertexMask visited) const {
    const VertexMask unvisited = all_ & ~visited;
    if (unvisited == 0) return false;
    const VertexMask open = unvisited | bit(cur) | (cycle_ ? bit(start_) : 0);
    for (VertexMask w = unvisited; w != 0; w &= w - 1) {
      Vertex v = std::countr_zero(w);
      int need = v == target_ ? 1 : 2;
      if (std::popcount(adj_[static_cast<std::size_t>(v)] & open) < need) return true;
    }
    if ((adj_[static_cast<std::size_t>(cur)] & unvisited) == 0) return true;
    VertexMask seed = unvisited & (~unvisited + 1);
    if (reach_within(seed, unvisited) != unvisited) return true;
    return false;
  }

  bool dfs(Vertex cur, VertexMask visited) {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (visited == all_) {
      if (cycle_) return (adj_[static_cast<std::size_t>(cur)] >> start_) & 1;
      return cur == target_;
    }
    if (!cycle_ && cur == target_) return false;
    if (prune(cur, visited)) return false;

    const VertexMask unvisited = all_ & ~visited;
    VertexMask candidates = adj_[static_cast<std::size_t>(cur)] & unvisited;
    const VertexMask forced = req_[static_cast<std::size_t>(cur)] & unvisited;
    if (std::popcount(forced) > 1) return false;
    if (forced != 0) candidates &= forced;
    if (!cycle_ && std::popcount(unvisited) > 1) candidates &= ~bit(target_);

    for (; candidates != 0; candidates &= candidates - 1) {
      Vertex u = std::countr_zero(candidates);
      // Every already-visited required partner of u must be cur.
      if ((req_[static_cast<std::size_t>(u)] & visited & ~bit(cur)) != 0) continue;
      path_.push_back(u);
      if (dfs(u, visited | bit(u))) return true;
      path_.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  VertexMask all_;
  std::vector<VertexMask> adj_;
  std::vector<VertexMask> req_;
  Vertex start_ = 0;
  Vertex target_ = -1;
  bool cycle_ = false;
  bool infeasible_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> path_;
};

}  // namespace hampath::backtrack
