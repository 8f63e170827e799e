#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <thread>
#include <vector>

#include "hampath/engine/backtrack.hpp"
#include "hampath/engine/exhaustive.hpp"
#include "hampath/engine/subset_dp.hpp"
#include "hampath/graph.hpp"
#include "hampath/path.hpp"

namespace hampath {

enum class Engine { Auto, Dp, Backtrack };

/// Largest order for which Auto picks the subset DP.
inline constexpr int kAutoDpOrder = 24;

constexpr std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::Auto: return "auto";
    case Engine::Dp: return "dp";
    case Engine::Backtrack: return "backtrack";
  }
  return "auto";
}

inline std::optional<Engine> parse_engine(std::string_view s) {
  if (s == "auto") return Engine::Auto;
  if (s == "dp") return Engine::Dp;
  if (s == "backtrack") return Engine::Backtrack;
  return std::nullopt;
}

/// Counters accumulated across solver calls.
struct SolverStats {
  std::uint64_t dp_runs = 0;
  std::uint64_t backtrack_nodes = 0;
  Engine last_engine = Engine::Auto;
};

struct SolverOptions {
  Engine engine = Engine::Auto;
  /// Worker threads for all-pairs tables. Results never depend on it.
  unsigned threads = 1;
  /// Optional sink; not synchronized, so callers share one per thread.
  SolverStats* stats = nullptr;
};

namespace detail {

inline void require_solver_order(const Graph& g) {
  if (g.order() > kMaxSolverOrder)
    throw Error(ErrorKind::TooLarge, "solvers limited to " + std::to_string(kMaxSolverOrder) +
                                         " vertices, got " + std::to_string(g.order()));
}

inline Engine resolve(const Graph& g, const SolverOptions& opt) {
  require_solver_order(g);
  Engine e = opt.engine;
  if (e == Engine::Auto) e = g.order() <= kAutoDpOrder ? Engine::Dp : Engine::Backtrack;
  if (e == Engine::Dp) dp::require_dp_order(g);
  if (opt.stats) opt.stats->last_engine = e;
  return e;
}

inline void check_pair(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) throw Error(ErrorKind::SameVertex, "endpoints must differ");
}

inline backtrack::Result run_backtrack(backtrack::Search search, const SolverOptions& opt) {
  backtrack::Result r = search.run();
  if (opt.stats) opt.stats->backtrack_nodes += r.nodes;
  return r;
}

inline void count_dp(const SolverOptions& opt, std::uint64_t runs = 1) {
  if (opt.stats) opt.stats->dp_runs += runs;
}

}  // namespace detail

/// Lexicographically least hamiltonian s-t path (read from s), if any.
inline std::optional<Path> find_ham_path(const Graph& g, Vertex s, Vertex t,
                                         const SolverOptions& opt = {}) {
  detail::require_solver_order(g);
  detail::check_pair(g, s, t);
  if (detail::resolve(g, opt) == Engine::Dp) {
    detail::count_dp(opt);
    return dp::least_path(g, s, t);
  }
  return detail::run_backtrack(backtrack::Search::path(g, s, t, {}), opt).path;
}

inline bool has_ham_path(const Graph& g, Vertex s, Vertex t, const SolverOptions& opt = {}) {
  detail::require_solver_order(g);
  detail::check_pair(g, s, t);
  if (detail::resolve(g, opt) == Engine::Dp) {
    detail::count_dp(opt);
    return dp::has_path(g, s, t);
  }
  return detail::run_backtrack(backtrack::Search::path(g, s, t, {}), opt).path.has_value();
}

/// Connected pairs of the whole graph. With the DP engine one table per
/// start vertex is built; rows are computed independently and merged in
/// vertex order, so the result does not depend on opt.threads.
inline PairTable ham_pair_table(const Graph& g, const SolverOptions& opt = {}) {
  const Engine engine = detail::resolve(g, opt);
  const int n = g.order();
  PairTable table(n);
  if (n < 2) return table;

  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(n), 0);
  auto work_row = [&](Vertex s) {
    if (engine == Engine::Dp) {
      rows[static_cast<std::size_t>(s)] = dp::hamiltonian_ends_from(g, s);
      return;
    }
    VertexMask row = 0;
    for (Vertex t = s + 1; t < n; ++t) {
      auto r = backtrack::Search::path(g, s, t, {}).run();
      nodes[static_cast<std::size_t>(s)] += r.nodes;
      if (r.path) row |= bit(t);
    }
    rows[static_cast<std::size_t>(s)] = row;
  };

  // Row n-1 adds nothing new once rows 0..n-2 are known.
  const int jobs = n - 1;
  const unsigned threads = std::clamp<unsigned>(opt.threads, 1, static_cast<unsigned>(jobs));
  if (threads <= 1) {
    for (Vertex s = 0; s < jobs; ++s) work_row(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (unsigned k = 0; k < threads; ++k)
      pool.emplace_back([&] {
        for (int s = next++; s < jobs; s = next++) work_row(s);
      });
    for (auto& th : pool) th.join();
  }

  for (Vertex s = 0; s < jobs; ++s)
    for (VertexMask r = rows[static_cast<std::size_t>(s)] & ~(bit(s + 1) - 1); r != 0; r &= r - 1)
      table.set(s, std::countr_zero(r));

  if (engine == Engine::Dp) {
    detail::count_dp(opt, static_cast<std::uint64_t>(jobs));
  } else if (opt.stats) {
    for (auto x : nodes) opt.stats->backtrack_nodes += x;
  }
  return table;
}

/// Lexicographically least hamiltonian cycle starting at 0, if any.
inline std::optional<Path> find_ham_cycle(const Graph& g, const SolverOptions& opt = {}) {
  detail::require_solver_order(g);
  if (g.order() < 3) throw Error(ErrorKind::TooSmall, "hamiltonian cycles need at least 3 vertices");
  if (detail::resolve(g, opt) == Engine::Dp) {
    detail::count_dp(opt);
    return dp::least_cycle(g);
  }
  return detail::run_backtrack(backtrack::Search::cycle(g), opt).path;
}

inline bool has_ham_cycle(const Graph& g, const SolverOptions& opt = {}) {
  detail::require_solver_order(g);
  if (g.order() < 3) throw Error(ErrorKind::TooSmall, "hamiltonian cycles need at least 3 vertices");
  if (detail::resolve(g, opt) == Engine::Dp) {
    detail::count_dp(opt);
    return dp::has_cycle(g);
  }
  return detail::run_backtrack(backtrack::Search::cycle(g), opt).path.has_value();
}

/// Lexicographically least hamiltonian s-t path containing every required
/// edge as a consecutive pair. Always runs the backtracking engine.
inline std::optional<Path> find_ham_path_with_required_edges(const Graph& g, Vertex s, Vertex t,
                                                             std::span<const Edge> required,
                                                             const SolverOptions& opt = {}) {
  detail::require_solver_order(g);
  detail::check_pair(g, s, t);
  for (const Edge& e : required)
    if (!g.has_edge(e))
      throw Error(ErrorKind::EdgeNotInGraph, "required edge (" + std::to_string(e.u) + "," +
                                                 std::to_string(e.v) + ") is not in the graph");
  if (opt.stats) opt.stats->last_engine = Engine::Backtrack;
  auto r = detail::run_backtrack(backtrack::Search::path(g, s, t, required), opt);
  return r.path;
}

}  // namespace hampath
