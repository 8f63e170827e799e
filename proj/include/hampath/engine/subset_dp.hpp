#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/path.hpp"

namespace hampath::dp {

/// Largest order the subset DP accepts: one table of 2^(n-1) 32-bit entries.
inline constexpr int kMaxDpOrder = 28;

inline void require_dp_order(const Graph& g) {
  if (g.order() > kMaxDpOrder)
    throw Error(ErrorKind::TooLarge, "subset DP limited to " + std::to_string(kMaxDpOrder) +
                                         " vertices, got " + std::to_string(g.order()));
}

/// Reachability over (covered set, end vertex) for simple paths that avoid a
/// pinned vertex x and start at one of the given sources.
///
/// ends(C) is the set of v in C such that some path starts in `sources`,
/// visits exactly the vertices of C and stops at v. Sets are indexed with the
/// bit of x squeezed out, so the table has 2^(n-1) entries.
///
/// With sources = N(x) this answers both questions the engines need:
///   ends(V - x)          = far endpoints of hamiltonian paths starting at x,
///   ends(V - x) & N(x)   = nonempty iff the graph has a hamiltonian cycle.
class ReachTable {
 public:
  ReachTable(const Graph& g, Vertex pinned, VertexMask sources)
      : n_(g.order()), pinned_(pinned), low_(bit(pinned) - 1) {
    require_dp_order(g);
    g.check_vertex(pinned);
    const int width = n_ - 1;
    table_.assign(std::size_t{1} << width, 0);
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbor_mask(v));

    const std::uint32_t limit = static_cast<std::uint32_t>(table_.size());
    for (std::uint32_t m = 1; m < limit; ++m) {
      if ((m & (m - 1)) == 0) {
        Vertex v = expand_bit(std::countr_zero(m));
        table_[m] = ((sources >> v) & 1) ? (std::uint32_t{1} << v) : 0;
        continue;
      }
      std::uint32_t acc = 0;
      for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
        int b = std::countr_zero(rest);
        Vertex v = expand_bit(b);
        if (table_[m ^ (std::uint32_t{1} << b)] & adj[static_cast<std::size_t>(v)]) acc |= std::uint32_t{1} << v;
      }
      table_[m] = acc;
    }
  }

  /// `cover` is a mask over original labels and must not contain the pinned vertex.
  VertexMask ends(VertexMask cover) const {
    if (cover == 0) return 0;
    return table_[compress(cover)];
  }

  VertexMask full_ends() const {
    VertexMask all = n_ >= 64 ? ~VertexMask{0} : bit(n_) - 1;
    return ends(all & ~bit(pinned_));
  }

 private:
  Vertex expand_bit(int b) const { return b >= pinned_ ? b + 1 : b; }

  std::uint32_t compress(VertexMask m) const {
    return static_cast<std::uint32_t>((m & low_) | ((m >> (pinned_ + 1)) << pinned_));
  }

  int n_;
  Vertex pinned_;
  VertexMask low_;
  std::vector<std::uint32_t> table_;
};

/// Far endpoints of all hamiltonian paths starting at s.
inline VertexMask hamiltonian_ends_from(const Graph& g, Vertex s) {
  if (g.order() == 1) return 0;
  return ReachTable(g, s, g.neighbor_mask(s)).full_ends();
}

inline bool has_path(const Graph& g, Vertex s, Vertex t) {
  return (hamiltonian_ends_from(g, s) >> t) & 1;
}

/// Lexicographically least hamiltonian s-t path, read from s.
inline std::optional<Path> least_path(const Graph& g, Vertex s, Vertex t) {
  if (g.order() < 2) return std::nullopt;
  ReachTable from_t(g, t, g.neighbor_mask(t));
  if (!((from_t.full_ends() >> s) & 1)) return std::nullopt;

  Path p{{s}};
  VertexMask unvisited = g.all_vertices() & ~bit(s);
  Vertex cur = s;
  while (unvisited != 0) {
    // Extending by u is feasible iff a path leaves t, covers the rest of
    // `unvisited`, and arrives at u.
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur)) {
      if (!((unvisited >> u) & 1)) continue;
      bool ok = unvisited == bit(t) ? u == t
                                    : u != t && ((from_t.ends(unvisited & ~bit(t)) >> u) & 1);
      if (ok) {
        next = u;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    p.vertices.push_back(next);
    unvisited &= ~bit(next);
    cur = next;
  }
  return p;
}

inline bool has_cycle(const Graph& g) {
  if (g.order() < 3) return false;
  return (hamiltonian_ends_from(g, 0) & g.neighbor_mask(0)) != 0;
}

/// Lexicographically least hamiltonian cycle starting at vertex 0; this is
/// automatically the orientation whose second vertex is below its last.
inline std::optional<Path> least_cycle(const Graph& g) {
  if (g.order() < 3) return std::nullopt;
  ReachTable closing(g, 0, g.neighbor_mask(0));
  VertexMask unvisited = g.all_vertices() & ~bit(0);
  if ((closing.ends(unvisited) & g.neighbor_mask(0)) == 0) return std::nullopt;

  Path p{{0}};
  Vertex cur = 0;
  while (unvisited != 0) {
    Vertex next = -1;
    VertexMask feasible = closing.ends(unvisited);
    for (Vertex u : g.neighbors(cur)) {
      if (((unvisited & feasible) >> u) & 1) {
        next = u;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    p.vertices.push_back(next);
    unvisited &= ~bit(next);
    cur = next;
  }
  return p;
}

}  // namespace hampath::dp
