#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "hampath/hampath.hpp"
#include "support/brute.hpp"

using namespace hampath;

namespace {

std::vector<std::pair<int, int>> as_pairs(const HpcCandidate& c) {
  std::vector<std::pair<int, int>> out;
  for (const auto& d : c.edges) out.emplace_back(d.v, d.w);
  return out;
}

HpcCandidate cand(std::initializer_list<std::pair<Vertex, Vertex>> es) {
  HpcCandidate c;
  for (auto [v, w] : es) c.edges.push_back({v, w});
  return c;
}

constexpr std::uint64_t kBudget = 100'000'000;

}  // namespace

TEST_CASE("every Petersen perfect matching is certified", "[hpc]") {
  Graph g = petersen();
  auto ms = perfect_matchings(g);
  REQUIRE(ms.size() == 6);
  auto paths = brute::ham_paths(g);
  for (const auto& m : ms) {
    auto c = HpcCandidate::from_edges(m);
    auto cert = is_hpath_connected(g, c);
    REQUIRE(cert);
    CHECK(cert->witnesses.size() == 10);
    CHECK(validate_certificate(g, *cert));
    CHECK(brute::hpath_connected(paths, as_pairs(c), true));
  }
}

TEST_CASE("small verifier examples", "[hpc]") {
  Graph c5 = cycle_graph(5);
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      auto c = HpcCandidate::from_edges({c5.edges()[a], c5.edges()[b]});
      CHECK_FALSE(is_hpath_connected(c5, c));
    }

  auto k4 = is_hpath_connected(complete_graph(4), cand({{0, 1}, {2, 3}}));
  REQUIRE(k4);
  CHECK(validate_certificate(complete_graph(4), *k4));

  CHECK_THROWS_AS(is_hpath_connected(c5, cand({{0, 1}})), Error);
  CHECK_THROWS_AS(is_hpath_connected(c5, cand({{0, 1}, {0, 2}})), Error);
  CHECK_THROWS_AS(is_hpath_connected(c5, cand({{0, 1}, {1, 0}})), Error);
}

TEST_CASE("certificates are rejected when tampered with", "[hpc]") {
  Graph g = petersen();
  auto cert = is_hpath_connected(g, HpcCandidate::from_edges(perfect_matchings(g).front()));
  REQUIRE(cert);
  auto bad = *cert;
  bad.witnesses.pop_back();
  CHECK_FALSE(validate_certificate(g, bad));
  bad = *cert;
  std::swap(bad.witnesses[0].path.vertices[3], bad.witnesses[0].path.vertices[4]);
  CHECK_FALSE(validate_certificate(g, bad));
  bad = *cert;
  bad.witnesses[0].j = bad.witnesses[0].i;
  CHECK_FALSE(validate_certificate(g, bad));
}

TEST_CASE("verifier agrees with brute force under both rules", "[hpc][property]") {
  std::mt19937_64 rng(606);
  int positives = 0;
  for (int k = 0; k < 60; ++k) {
    int n = 5 + static_cast<int>(rng() % 4);
    Graph g = random_graph(n, 0.5 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
    if (g.size() < 3) continue;
    auto paths = brute::ham_paths(g);
    for (int t = 0; t < 6; ++t) {
      std::vector<Edge> pick = g.edges();
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(2 + rng() % std::min<std::size_t>(3, pick.size() - 1));
      HpcCandidate c;
      for (const Edge& e : pick) c.edges.push_back(rng() % 2 ? DesignatedEdge{e.u, e.v} : DesignatedEdge{e.v, e.u});
      for (auto rule : {WitnessRule::AvoidEndEdges, WitnessRule::AllowEndEdges}) {
        const bool expect = brute::hpath_connected(paths, as_pairs(c), rule == WitnessRule::AvoidEndEdges);
        auto got = is_hpath_connected(g, c, rule);
        INFO(to_graph6(g) << " rule " << to_string(rule));
        CHECK(got.has_value() == expect);
        if (got) {
          ++positives;
          CHECK(validate_certificate(g, *got, rule));
        }
      }
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("Petersen H-path connected sets, default rule", "[hpc]") {
  Graph g = petersen();
  auto paths = brute::ham_paths(g);

  // Size 2: exactly the vertex-disjoint edge pairs.
  std::size_t certified = 0, disjoint = 0;
  const auto& es = g.edges();
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      auto c = HpcCandidate::from_edges({es[a], es[b]});
      const bool ok = is_hpath_connected(g, c).has_value();
      certified += ok;
      disjoint += !es[a].touches(es[b]);
      CHECK(ok == !es[a].touches(es[b]));
    }
  CHECK(certified == 75);
  CHECK(disjoint == 75);

  auto five = find_hpc_set(g, 5, kBudget);
  CHECK(five.status == HpcStatus::Found);
  REQUIRE(five.certificate);
  CHECK(validate_certificate(g, *five.certificate));
  CHECK(five.certificate->candidate.pairwise_disjoint());
  CHECK(five.warnings.empty());

  CHECK(find_hpc_set(g, 6, kBudget).status == HpcStatus::None);

  auto best = max_hpc_set(g, kBudget);
  CHECK(best.exhaustive);
  CHECK(best.best.size() == 5);
  REQUIRE(best.certificate);
  CHECK(brute::hpath_connected(paths, as_pairs(best.best), true));
}

TEST_CASE("subsets of a certified set stay certified", "[hpc][property]") {
  Graph g = petersen();
  for (const auto& m : perfect_matchings(g)) {
    for (unsigned mask = 0; mask < 32; ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Edge> sub;
      for (int b = 0; b < 5; ++b)
        if (mask >> b & 1) sub.push_back(m[static_cast<std::size_t>(b)]);
      CHECK(is_hpath_connected(g, HpcCandidate::from_edges(sub)));
    }
  }
}

TEST_CASE("max search certificates re-validate", "[hpc][property]") {
  std::mt19937_64 rng(1717);
  for (int k = 0; k < 25; ++k) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_graph(n, 0.6, rng);
    if (g.size() < 2 || !is_connected(g)) continue;
    auto paths = brute::ham_paths(g);
    for (auto rule : {WitnessRule::AvoidEndEdges, WitnessRule::AllowEndEdges}) {
      auto r = max_hpc_set(g, kBudget, rule);
      REQUIRE(r.exhaustive);
      if (!r.certificate) continue;
      CHECK(validate_certificate(g, *r.certificate, rule));
      CHECK(brute::hpath_connected(paths, as_pairs(r.best), rule == WitnessRule::AvoidEndEdges));
      // Nothing larger exists.
      CHECK(find_hpc_set(g, r.best.size() + 1, kBudget, rule).status == HpcStatus::None);
    }
  }
}

TEST_CASE("Petersen H-path connected sets, literal rule", "[hpc]") {
  Graph g = petersen();
  auto paths = brute::ham_paths(g);
  const auto rule = WitnessRule::AllowEndEdges;

  auto seven = cand({{0, 1}, {0, 4}, {1, 2}, {3, 8}, {5, 7}, {6, 9}, {7, 9}});
  auto cert = is_hpath_connected(g, seven, rule);
  REQUIRE(cert);
  CHECK(validate_certificate(g, *cert, rule));
  CHECK_FALSE(validate_certificate(g, *cert, WitnessRule::AvoidEndEdges));
  CHECK(brute::hpath_connected(paths, as_pairs(seven), false));
  CHECK_FALSE(is_hpath_connected(g, seven));

  auto best = max_hpc_set(g, kBudget, rule);
  CHECK(best.exhaustive);
  CHECK(best.best.size() == 7);
  CHECK(find_hpc_set(g, 8, kBudget, rule).status == HpcStatus::None);
}

TEST_CASE("search edge cases", "[hpc]") {
  auto c6 = max_hpc_set(cycle_graph(6), kBudget);
  CHECK(c6.exhaustive);
  CHECK(c6.best.size() == 0);
  CHECK_FALSE(c6.certificate);
  CHECK(find_hpc_set(cycle_graph(6), 2, kBudget).status == HpcStatus::None);

  auto k4 = max_hpc_set(complete_graph(4), kBudget);
  CHECK_FALSE(k4.warnings.empty());
  CHECK(k4.best.size() >= 2);

  auto starved = max_hpc_set(petersen(), 50);
  CHECK_FALSE(starved.exhaustive);
  CHECK(find_hpc_set(petersen(), 5, 50).status == HpcStatus::Inconclusive);

  CHECK_THROWS_AS(max_hpc_set(petersen(), 0), Error);
  CHECK_THROWS_AS(find_hpc_set(petersen(), 1, kBudget), Error);
}

TEST_CASE("perfect matchings", "[hpc]") {
  CHECK(perfect_matchings(complete_graph(4)).size() == 3);
  CHECK(perfect_matchings(complete_graph(6)).size() == 15);
  CHECK(perfect_matchings(cycle_graph(5)).empty());
  auto ms = perfect_matchings(petersen());
  CHECK(std::is_sorted(ms.begin(), ms.end()));
  for (const auto& m : ms) CHECK(HpcCandidate::from_edges(m).pairwise_disjoint());
}
