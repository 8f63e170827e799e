#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hampath/graph.hpp"
#include "hampath/ham.hpp"
#include "hampath/path.hpp"

namespace hampath {

/// Edge with a chosen labelling of its ends (v_i, w_i).
struct DesignatedEdge {
  Vertex v = 0;
  Vertex w = 0;

  Edge edge() const { return Edge(v, w); }
  friend bool operator==(const DesignatedEdge&, const DesignatedEdge&) = default;
};

/// Ordered list of distinct host-graph edges whose pairwise hamiltonian
/// connectivity is in question.
struct HpcCandidate {
  std::vector<DesignatedEdge> edges;

  std::size_t size() const { return edges.size(); }

  static HpcCandidate from_edges(const std::vector<Edge>& list) {
    HpcCandidate c;
    for (const Edge& e : list) c.edges.push_back({e.u, e.v});
    return c;
  }

  std::vector<Edge> plain_edges() const {
    std::vector<Edge> out;
    for (const auto& d : edges) out.push_back(d.edge());
    return out;
  }

  bool pairwise_disjoint() const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        if (edges[i].edge().touches(edges[j].edge())) return false;
    return true;
  }

  friend bool operator==(const HpcCandidate&, const HpcCandidate&) = default;
};

inline void validate_candidate(const Graph& g, const HpcCandidate& cand) {
  std::vector<Edge> seen;
  for (const auto& d : cand.edges) {
    if (!g.has_edge(d.edge()))
      throw Error(ErrorKind::EdgeNotInGraph, "edge (" + std::to_string(d.v) + "," +
                                                 std::to_string(d.w) + ") is not in the graph");
    if (std::find(seen.begin(), seen.end(), d.edge()) != seen.end())
      throw Error(ErrorKind::DomainError, "edge (" + std::to_string(d.v) + "," +
                                              std::to_string(d.w) + ") listed twice");
    seen.push_back(d.edge());
  }
}

/// Hamiltonian path from an end of edge i to an end of edge j that contains
/// every other candidate edge.
struct PairWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Path path;
};

struct HpcCertificate {
  HpcCandidate candidate;
  std::vector<PairWitness> witnesses;
};

/// How a pair witness may treat the pair's own two edges. Under
/// AvoidEndEdges the path joining e_i and e_j traverses neither of them;
/// under AllowEndEdges it is unconstrained on e_i and e_j.
enum class WitnessRule { AvoidEndEdges, AllowEndEdges };

constexpr std::string_view to_string(WitnessRule r) {
  return r == WitnessRule::AvoidEndEdges ? "avoid-end-edges" : "allow-end-edges";
}

/// Re-checks a certificate from scratch: witness count, path validity,
/// endpoint membership and required-edge containment.
inline bool validate_certificate(const Graph& g, const HpcCertificate& cert,
                                 WitnessRule rule = WitnessRule::AvoidEndEdges) {
  const auto& es = cert.candidate.edges;
  const std::size_t s = es.size();
  if (s < 2 || cert.witnesses.size() != s * (s - 1) / 2) return false;
  std::vector<std::vector<char>> covered(s, std::vector<char>(s, 0));
  for (const auto& w : cert.witnesses) {
    if (w.i >= s || w.j >= s || w.i == w.j) return false;
    if (covered[w.i][w.j]) return false;
    covered[w.i][w.j] = covered[w.j][w.i] = 1;
    if (!is_hamiltonian_path(g, w.path)) return false;
    const Edge ei = es[w.i].edge();
    const Edge ej = es[w.j].edge();
    bool forward = ei.has(w.path.front()) && ej.has(w.path.back());
    bool backward = ej.has(w.path.front()) && ei.has(w.path.back());
    if (!forward && !backward) return false;
    if (rule == WitnessRule::AvoidEndEdges && (w.path.uses_edge(ei) || w.path.uses_edge(ej))) return false;
    for (std::size_t k = 0; k < s; ++k) {
      if (k == w.i || k == w.j) continue;
      if (!w.path.uses_edge(es[k].edge())) return false;
    }
  }
  return true;
}

enum class HpcStatus { Found, None, Inconclusive };

constexpr std::string_view to_string(HpcStatus s) {
  switch (s) {
    case HpcStatus::Found: return "found";
    case HpcStatus::None: return "none";
    case HpcStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

/// Memoizing verifier. Witness queries are cached per (endpoints, required
/// set, forbidden set), so subsets revisited during a search cost nothing the
/// second time.
/// Budget counts backtracking node expansions across all uncached queries;
/// zero means unlimited.
class HpcVerifier {
 public:
  explicit HpcVerifier(const Graph& g, std::uint64_t budget = 0,
                       WitnessRule rule = WitnessRule::AvoidEndEdges)
      : g_(g), budget_(budget), rule_(rule) {
    detail::require_solver_order(g);
  }

  struct Outcome {
    HpcStatus status = HpcStatus::None;
    std::optional<HpcCertificate> certificate;
    /// First failing pair when status is None.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  };

  Outcome verify(const HpcCandidate& cand) {
    Outcome out;
    HpcCertificate cert{cand, {}};
    const auto& es = cand.edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        auto w = pair_witness(cand, i, j);
        if (w.status == HpcStatus::Inconclusive) {
          out.status = HpcStatus::Inconclusive;
          return out;
        }
        if (!w.path) {
          out.status = HpcStatus::None;
          out.failing_pair = {i, j};
          return out;
        }
        cert.witnesses.push_back({i, j, *w.path});
      }
    }
    out.status = HpcStatus::Found;
    out.certificate = std::move(cert);
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_exhausted() const { return exhausted_; }

 private:
  struct Query {
    HpcStatus status = HpcStatus::None;
    std::optional<Path> path;
  };

  Query pair_witness(const HpcCandidate& cand, std::size_t i, std::size_t j) {
    std::vector<Edge> required;
    for (std::size_t k = 0; k < cand.size(); ++k)
      if (k != i && k != j) required.push_back(cand.edges[k].edge());
    std::sort(required.begin(), required.end());

    const auto& ei = cand.edges[i];
    const auto& ej = cand.edges[j];
    std::vector<Edge> forbidden;
    if (rule_ == WitnessRule::AvoidEndEdges)
      forbidden = {std::min(ei.edge(), ej.edge()), std::max(ei.edge(), ej.edge())};
    const std::pair<Vertex, Vertex> combos[] = {{ei.v, ej.v}, {ei.v, ej.w}, {ei.w, ej.v}, {ei.w, ej.w}};
    bool inconclusive = false;
    for (auto [a, b] : combos) {
      if (a == b) continue;
      Query q = solve(a, b, required, forbidden);
      if (q.path) return q;
      if (q.status == HpcStatus::Inconclusive) inconclusive = true;
    }
    return {inconclusive ? HpcStatus::Inconclusive : HpcStatus::None, std::nullopt};
  }

  Query solve(Vertex a, Vertex b, const std::vector<Edge>& required, const std::vector<Edge>& forbidden) {
    auto key = std::make_tuple(a, b, required, forbidden);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (exhausted_) return {HpcStatus::Inconclusive, std::nullopt};

    std::uint64_t remaining = 0;
    if (budget_ != 0) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return {HpcStatus::Inconclusive, std::nullopt};
      }
      remaining = budget_ - nodes_;
    }
    auto r = backtrack::Search::path(g_, a, b, required, remaining, forbidden).run();
    nodes_ += r.nodes;
    Query q;
    if (r.status == backtrack::Status::BudgetExceeded) {
      exhausted_ = true;
      q.status = HpcStatus::Inconclusive;
      return q;  // not cached: a bigger budget could settle it
    }
    q.status = r.path ? HpcStatus::Found : HpcStatus::None;
    q.path = std::move(r.path);
    cache_.emplace(std::move(key), q);
    return q;
  }

  const Graph& g_;
  std::uint64_t budget_;
  WitnessRule rule_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::map<std::tuple<Vertex, Vertex, std::vector<Edge>, std::vector<Edge>>, Query> cache_;
};

/// Certificate for `cand` if every pair of its edges is joined as required.
inline std::optional<HpcCertificate> is_hpath_connected(const Graph& g, const HpcCandidate& cand,
                                                        WitnessRule rule = WitnessRule::AvoidEndEdges) {
  detail::require_solver_order(g);
  if (cand.size() < 2) throw Error(ErrorKind::TooFewEdges, "need at least two edges");
  validate_candidate(g, cand);
  HpcVerifier verifier(g, 0, rule);
  return verifier.verify(cand).certificate;
}

struct HpcSearchResult {
  HpcStatus status = HpcStatus::None;
  std::optional<HpcCertificate> certificate;
  std::uint64_t nodes = 0;
  std::vector<std::string> warnings;
};

struct MaxHpcResult {
  /// Largest certified set found; empty when no pair of edges qualifies.
  HpcCandidate best;
  std::optional<HpcCertificate> certificate;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  std::vector<std::string> warnings;
};

namespace hpc_detail {

/// Candidate edges by ascending degree sum, ties by edge order.
inline std::vector<Edge> search_order(const Graph& g) {
  std::vector<Edge> es = g.edges();
  std::stable_sort(es.begin(), es.end(), [&](const Edge& a, const Edge& b) {
    return g.degree(a.u) + g.degree(a.v) < g.degree(b.u) + g.degree(b.v);
  });
  return es;
}

inline std::vector<std::string> precondition_warnings(const Graph& g) {
  std::vector<std::string> w;
  if (g.order() >= 3 && has_ham_cycle(g))
    w.emplace_back("input graph is hamiltonian; H-path connected sets are only meaningful for nonhamiltonian graphs");
  return w;
}

inline HpcCandidate candidate_of(const std::vector<Edge>& order, const std::vector<std::size_t>& picked) {
  HpcCandidate c;
  for (std::size_t k : picked) c.edges.push_back({order[k].u, order[k].v});
  return c;
}

inline std::vector<Edge> sorted_edges(const HpcCandidate& c) {
  auto es = c.plain_edges();
  std::sort(es.begin(), es.end());
  return es;
}

/// Subset search shared by find_hpc_set and max_hpc_set. Supersets of a
/// failing set fail too (more required edges, same endpoint pairs), so a
/// branch dies as soon as its current set fails verification.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::uint64_t budget, WitnessRule rule)
      : order_(search_order(g)), verifier_(g, budget, rule) {}

  /// Stops at the first certified set of exactly `target` edges.
  HpcStatus find(std::size_t target, std::optional<HpcCertificate>& out) {
    target_ = target;
    mode_ = Mode::Find;
    std::vector<std::size_t> picked;
    descend(picked, 0);
    if (found_) {
      out = found_;
      return HpcStatus::Found;
    }
    return verifier_.budget_exhausted() ? HpcStatus::Inconclusive : HpcStatus::None;
  }

  /// Largest certified set; ties resolved to the lexicographically least
  /// sorted edge list.
  bool maximize(std::optional<HpcCertificate>& out) {
    mode_ = Mode::Max;
    std::vector<std::size_t> picked;
    descend(picked, 0);
    out = best_;
    return !verifier_.budget_exhausted();
  }

  std::uint64_t nodes() const { return verifier_.nodes(); }

 private:
  enum class Mode { Find, Max };

  bool stop() const { return verifier_.budget_exhausted() || (mode_ == Mode::Find && found_); }

  void descend(std::vector<std::size_t>& picked, std::size_t next) {
    for (std::size_t k = next; k < order_.size() && !stop(); ++k) {
      const std::size_t reachable = picked.size() + 1 + (order_.size() - k - 1);
      if (mode_ == Mode::Find && reachable < target_) return;
      if (mode_ == Mode::Max && best_ && reachable < best_->candidate.size()) return;

      picked.push_back(k);
      HpcCandidate cand = candidate_of(order_, picked);
      bool alive = true;
      if (picked.size() >= 2) {
        auto outcome = verifier_.verify(cand);
        alive = outcome.status == HpcStatus::Found;
        if (alive) record(*outcome.certificate);
      }
      if (alive && !stop() && !(mode_ == Mode::Find && picked.size() == target_)) descend(picked, k + 1);
      picked.pop_back();
    }
  }

  void record(const HpcCertificate& cert) {
    if (mode_ == Mode::Find) {
      if (cert.candidate.size() == target_) found_ = cert;
      return;
    }
    if (!best_ || cert.candidate.size() > best_->candidate.size() ||
        (cert.candidate.size() == best_->candidate.size() &&
         sorted_edges(cert.candidate) < sorted_edges(best_->candidate)))
      best_ = cert;
  }

  std::vector<Edge> order_;
  HpcVerifier verifier_;
  Mode mode_ = Mode::Find;
  std::size_t target_ = 0;
  std::optional<HpcCertificate> found_;
  std::optional<HpcCertificate> best_;
};

}  // namespace hpc_detail

/// Searches for a certified set of exactly target_size edges. None means the
/// subset space was exhausted; Inconclusive means the budget ran out first.
inline HpcSearchResult find_hpc_set(const Graph& g, std::size_t target_size, std::uint64_t budget,
                                    WitnessRule rule = WitnessRule::AvoidEndEdges) {
  detail::require_solver_order(g);
  if (budget == 0) throw Error(ErrorKind::BudgetZero, "search budget must be positive");
  if (target_size < 2) throw Error(ErrorKind::TooFewEdges, "target size must be at least 2");
  HpcSearchResult r;
  r.warnings = hpc_detail::precondition_warnings(g);
  hpc_detail::SubsetSearch search(g, budget, rule);
  r.status = search.find(target_size, r.certificate);
  r.nodes = search.nodes();
  return r;
}

inline MaxHpcResult max_hpc_set(const Graph& g, std::uint64_t budget,
                                WitnessRule rule = WitnessRule::AvoidEndEdges) {
  detail::require_solver_order(g);
  if (budget == 0) throw Error(ErrorKind::BudgetZero, "search budget must be positive");
  MaxHpcResult r;
  r.warnings = hpc_detail::precondition_warnings(g);
  hpc_detail::SubsetSearch search(g, budget, rule);
  r.exhaustive = search.maximize(r.certificate);
  if (r.certificate) r.best = r.certificate->candidate;
  r.nodes = search.nodes();
  return r;
}

/// All perfect matchings, each as a sorted edge list, in lexicographic order.
inline std::vector<std::vector<Edge>> perfect_matchings(const Graph& g) {
  detail::require_solver_order(g);
  std::vector<std::vector<Edge>> out;
  if (g.order() % 2 != 0) return out;
  std::vector<Edge> current;
  auto rec = [&](auto&& self, VertexMask free) -> void {
    if (free == 0) {
      out.push_back(current);
      return;
    }
    Vertex u = std::countr_zero(free);
    for (VertexMask c = g.neighbor_mask(u) & free; c != 0; c &= c - 1) {
      Vertex v = std::countr_zero(c);
      current.emplace_back(u, v);
      self(self, free & ~bit(u) & ~bit(v));
      current.pop_back();
    }
  };
  rec(rec, g.all_vertices());
  return out;
}

}  // namespace hampath
