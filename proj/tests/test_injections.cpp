#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "berge/extremal.hpp"
#include "berge/injections.hpp"
#include "test_util.hpp"

using namespace berge;

namespace {

void check_injection(const Hypergraph& h, const Injection& inj, int allowed) {
  REQUIRE(static_cast<int>(inj.missed.size()) <= allowed);
  std::set<Hyperedge> used;
  std::set<Vertex> dom;
  for (const auto& [v, e] : inj.assignment) {
    REQUIRE(std::binary_search(e.begin(), e.end(), v));
    REQUIRE(h.has_edge(e));
    REQUIRE(used.insert(e).second);
    REQUIRE(dom.insert(v).second);
  }
  for (Vertex v : inj.missed) REQUIRE(dom.count(v) == 0);
  REQUIRE(dom.size() + inj.missed.size() == static_cast<std::size_t>(h.n()));
}

void check_deficient(const Hypergraph& h, const DeficientSet& bad) {
  REQUIRE_FALSE(bad.vertices.empty());
  std::set<Vertex> s(bad.vertices.begin(), bad.vertices.end());
  int incident = 0;
  for (const Hyperedge& e : h.edges())
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return s.count(v); }))
      ++incident;
  REQUIRE(incident == bad.incident_edges);
  REQUIRE(bad.incident_edges < static_cast<int>(bad.vertices.size()));
}

}  // namespace

TEST_CASE("injection on a complete block") {
  auto res = hall_injection(testutil::k4_cubed(), 0);
  REQUIRE(std::holds_alternative<Injection>(res));
  const Injection& inj = std::get<Injection>(res);
  REQUIRE(inj.missed.empty());
  REQUIRE(inj.assignment.size() == 4);
  check_injection(testutil::k4_cubed(), inj, 0);
}

TEST_CASE("three edges on four vertices") {
  Hypergraph h(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});

  auto one = hall_injection(h, 1);
  REQUIRE(std::holds_alternative<Injection>(one));
  const Injection& inj = std::get<Injection>(one);
  REQUIRE(inj.missed.size() == 1);
  REQUIRE(inj.assignment.size() == 3);
  check_injection(h, inj, 1);

  auto zero = hall_injection(h, 0);
  REQUIRE(std::holds_alternative<DeficientSet>(zero));
  const DeficientSet& bad = std::get<DeficientSet>(zero);
  REQUIRE(bad.vertices == std::vector<Vertex>{1, 2, 3, 4});
  REQUIRE(bad.incident_edges == 3);
  check_deficient(h, bad);
}

TEST_CASE("allowed misses is 0 or 1 only") {
  REQUIRE_THROWS_AS(hall_injection(testutil::k4_cubed(), 2), PreconditionError);
  REQUIRE_THROWS_AS(hall_injection(testutil::k4_cubed(), -1), PreconditionError);
}

TEST_CASE("deficient witness stays clear of one miss") {
  // single edge, n = 5: plenty of deficiency either way
  Hypergraph h(3, 5, {{1, 2, 3}});

  auto zero = hall_injection(h, 0);
  REQUIRE(std::holds_alternative<DeficientSet>(zero));
  check_deficient(h, std::get<DeficientSet>(zero));

  auto one = hall_injection(h, 1);
  REQUIRE(std::holds_alternative<DeficientSet>(one));
  const DeficientSet& bad = std::get<DeficientSet>(one);
  check_deficient(h, bad);
  REQUIRE(static_cast<int>(bad.vertices.size()) <= h.n() - 1);
}

TEST_CASE("random injections and deficient sets") {
  std::mt19937 rng(4401);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Hypergraph h = testutil::random_hypergraph(rng, n, 3, rng() % 10);
    for (int allowed : {0, 1}) {
      auto res = hall_injection(h, allowed);
      if (std::holds_alternative<Injection>(res)) {
        check_injection(h, std::get<Injection>(res), allowed);
      } else {
        const DeficientSet& bad = std::get<DeficientSet>(res);
        check_deficient(h, bad);
        if (allowed == 1)
          REQUIRE(static_cast<int>(bad.vertices.size()) <= h.n() - 1);
      }
    }
  }
}

TEST_CASE("reduction keeps a Hall remainder") {
  // already fine: nothing removed
  DeficiencyReduction same = deficiency_delete(testutil::k4_cubed(), 0);
  REQUIRE(same.log.empty());
  REQUIRE(same.reduced == testutil::k4_cubed());
  REQUIRE(same.kept_vertices == std::vector<Vertex>{1, 2, 3, 4});

  // a starving triple next to a complete block: the triple goes, block stays
  Hypergraph h(3, 7, {{1, 2, 3}, {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}});
  DeficiencyReduction red = deficiency_delete(h, 0);
  REQUIRE(red.log.size() == 1);
  REQUIRE(red.log[0].removed_vertices == std::vector<Vertex>{1, 2, 3});
  REQUIRE(red.log[0].removed_edges == std::vector<Hyperedge>{{1, 2, 3}});
  REQUIRE(red.kept_vertices == std::vector<Vertex>{4, 5, 6, 7});
  REQUIRE(red.reduced == testutil::k4_cubed());
}

TEST_CASE("reduction accounting on randoms") {
  std::mt19937 rng(4402);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Hypergraph h = testutil::random_hypergraph(rng, n, 3, rng() % 8);
    int allowed = static_cast<int>(rng() % 2);
    DeficiencyReduction red = deficiency_delete(h, allowed);

    auto res = hall_injection(red.reduced, allowed);
    REQUIRE(std::holds_alternative<Injection>(res));

    // every removal was deficient, and every edge is either kept or logged once
    std::size_t gone = 0;
    for (const DeficiencyRemoval& step : red.log) {
      REQUIRE(step.removed_vertices.size() > step.removed_edges.size());
      gone += step.removed_edges.size();
    }
    REQUIRE(red.reduced.edge_count() + gone ==
            static_cast<std::size_t>(h.edge_count()));

    std::size_t removed_vertices = 0;
    for (const DeficiencyRemoval& step : red.log)
      removed_vertices += step.removed_vertices.size();
    REQUIRE(red.kept_vertices.size() + removed_vertices ==
            static_cast<std::size_t>(h.n()));
  }
}

namespace {

void check_dense_outcome(const Hypergraph& h, int k,
                         const DenseSetSearchResult& res) {
  const int r = h.r();
  const int need = (k == r + 2) ? r : r - 1;
  if (std::holds_alternative<BergeCycle>(res.outcome)) {
    const BergeCycle& c = std::get<BergeCycle>(res.outcome);
    REQUIRE(c.length() >= k);
    Validation v = validate_berge_cycle(h, c);
    INFO(v.reason);
    REQUIRE(v.ok);
    return;
  }
  const DenseTerminalSet& d = std::get<DenseTerminalSet>(res.outcome);
  REQUIRE(static_cast<int>(d.vertices.size()) == r + 1);
  REQUIRE(static_cast<int>(d.inside_edges.size()) >= need);
  for (const Hyperedge& e : d.inside_edges) {
    REQUIRE(h.has_edge(e));
    REQUIRE(std::includes(d.vertices.begin(), d.vertices.end(), e.begin(),
                          e.end()));
  }
  if (!res.used_fallback) {
    Validation v = validate_berge_path(h, d.anchor_path);
    INFO(v.reason);
    REQUIRE(v.ok);
    // the set is the terminal window of the anchor
    for (Vertex s : d.vertices)
      REQUIRE(std::count(d.anchor_path.vertices.begin(),
                         d.anchor_path.vertices.end(), s) == 1);
  }
}

}  // namespace

TEST_CASE("dense terminal set on a two-block host") {
  Hypergraph h = testutil::double_block();
  DenseSetSearchResult res = find_dense_terminal_set(h, 5);
  REQUIRE(std::holds_alternative<DenseTerminalSet>(res.outcome));
  check_dense_outcome(h, 5, res);
  REQUIRE(std::get<DenseTerminalSet>(res.outcome).inside_edges.size() >= 3);
}

TEST_CASE("overfull host yields a long cycle") {
  Hypergraph h(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 4, 5}});
  DenseSetSearchResult res = find_dense_terminal_set(h, 4);
  REQUIRE(std::holds_alternative<BergeCycle>(res.outcome));
  check_dense_outcome(h, 4, res);
}

TEST_CASE("lean block chain yields a dense set") {
  Hypergraph h = generate_block_tree(chain_plan(3, 2, BlockFlavor::kMinus));
  REQUIRE(h.n() == 7);
  REQUIRE(h.edge_count() == 6);
  DenseSetSearchResult res = find_dense_terminal_set(h, 4);
  REQUIRE(std::holds_alternative<DenseTerminalSet>(res.outcome));
  check_dense_outcome(h, 4, res);
  REQUIRE(std::get<DenseTerminalSet>(res.outcome).inside_edges.size() >= 2);
}

TEST_CASE("dense set preconditions") {
  REQUIRE_THROWS_AS(find_dense_terminal_set(testutil::k4_cubed(), 3),
                    PreconditionError);
  REQUIRE_THROWS_AS(find_dense_terminal_set(testutil::k4_cubed(), 6),
                    PreconditionError);
  REQUIRE_THROWS_AS(find_dense_terminal_set(Hypergraph(2, 3, {{1, 2}, {2, 3}}), 3),
                    PreconditionError);

  Hypergraph split(3, 6, {{1, 2, 3}, {4, 5, 6}});
  REQUIRE_THROWS_AS(find_dense_terminal_set(split, 4), PreconditionError);

  // two unmatched vertices, one allowed miss
  Hypergraph starving(3, 5, {{1, 2, 3}, {3, 4, 5}});
  REQUIRE_THROWS_AS(find_dense_terminal_set(starving, 4), PreconditionError);

  // below r+1 vertices nothing but a cycle could be returned
  REQUIRE_THROWS_AS(find_dense_terminal_set(Hypergraph(3, 1, {}), 4),
                    PreconditionError);
}

TEST_CASE("complete block resolves under both thresholds") {
  Hypergraph k4 = testutil::k4_cubed();
  // e = 4 > n-1, so a 4-cycle exists and the k=4 contract allows either
  // outcome; both must self-certify
  check_dense_outcome(k4, 4, find_dense_terminal_set(k4, 4));
  check_dense_outcome(k4, 5, find_dense_terminal_set(k4, 5));
}

TEST_CASE("dense set search on random connected hosts") {
  std::mt19937 rng(4403);
  int done = 0;
  for (int trial = 0; trial < 4000 && done < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 4);
    Hypergraph h = testutil::random_hypergraph(rng, n, 3, 1 + rng() % 10);
    if (!is_connected(h)) continue;
    for (int k : {4, 5}) {
      int allowed = (k == 5) ? 0 : 1;
      auto m = hall_injection(h, allowed);
      if (!std::holds_alternative<Injection>(m)) continue;
      DenseSetSearchResult res = find_dense_terminal_set(h, k);
      check_dense_outcome(h, k, res);
      REQUIRE(res.improvement_steps >= 0);
      ++done;
    }
  }
  REQUIRE(done >= 400);
}
