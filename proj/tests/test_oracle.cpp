#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "berge/oracle.hpp"
#include "berge/search.hpp"
#include "test_util.hpp"

using namespace berge;

TEST_CASE("brute force longest cycle") {
  REQUIRE(brute_force_longest_cycle(testutil::k4_cubed()) == 4);
  REQUIRE(brute_force_longest_cycle(
              Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}})) == 3);
  REQUIRE(brute_force_longest_cycle(Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}})) == 2);
  REQUIRE_FALSE(brute_force_longest_cycle(Hypergraph(3, 3, {{1, 2, 3}})).has_value());
  REQUIRE_FALSE(brute_force_longest_cycle(Hypergraph(3, 5, {})).has_value());
  REQUIRE(brute_force_longest_cycle(testutil::double_block()) == 4);
}

TEST_CASE("brute force longest path") {
  REQUIRE(brute_force_longest_path(testutil::k4_cubed()) == 3);
  REQUIRE(brute_force_longest_path(Hypergraph(3, 3, {{1, 2, 3}})) == 1);
  REQUIRE(brute_force_longest_path(Hypergraph(3, 3, {})) == 0);
  REQUIRE_FALSE(brute_force_longest_path(Hypergraph(3, 0, {})).has_value());
  REQUIRE(brute_force_longest_path(testutil::double_block()) == 6);
}

TEST_CASE("brute force refuses hosts beyond its cap") {
  Hypergraph big(3, 9, {{1, 2, 3}});
  REQUIRE_THROWS_AS(brute_force_longest_cycle(big), PreconditionError);
  REQUIRE_THROWS_AS(brute_force_longest_path(big), PreconditionError);
  REQUIRE_FALSE(brute_force_longest_cycle(big, 9).has_value());
  REQUIRE(brute_force_longest_path(big, 9) == 1);
}

TEST_CASE("the two routes agree on random hosts") {
  std::mt19937 rng(6601);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    Hypergraph h = testutil::random_hypergraph(rng, n, 3, rng() % 9);

    std::optional<int> slow = brute_force_longest_cycle(h);
    LongestCycleResult fast = longest_berge_cycle(h);
    if (slow.has_value()) {
      REQUIRE(fast.status == SearchStatus::kFound);
      REQUIRE(fast.cycle->length() == *slow);
    } else {
      REQUIRE(fast.status == SearchStatus::kNoneExists);
    }

    std::optional<int> slow_path = brute_force_longest_path(h);
    PathSearchResult fast_path = longest_berge_path(h);
    REQUIRE(fast_path.path->length() == *slow_path);
  }
}

TEST_CASE("census of small cycle-free families") {
  CensusReport a = max_edges_no_long_cycle(4, 3, 4);
  REQUIRE(a.max_edges == 3);
  REQUIRE(a.extremal_count == 4);
  REQUIRE(a.has_theorem_bound);
  REQUIRE(a.bound_from_theorem == Rational(3));
  REQUIRE(a.agreement);

  // any four edges would have to be all of them, and that closes a cycle
  for (const Hypergraph& h : a.extremal) {
    REQUIRE(h.edge_count() == 3);
    REQUIRE_FALSE(brute_force_longest_cycle(h).value_or(0) >= 4);
  }

  CensusReport b = max_edges_no_long_cycle(4, 3, 3);
  REQUIRE(b.max_edges == 2);
  REQUIRE(b.extremal_count == 6);
  REQUIRE_FALSE(b.has_theorem_bound);  // k = 3 is outside both cycle bounds
  REQUIRE(b.agreement);

  CensusReport c = max_edges_no_long_cycle(5, 3, 4);
  REQUIRE(c.max_edges == 3);
  REQUIRE(c.extremal_count == 120);  // every 3-subset of the 10 triples
  REQUIRE(c.agreement);              // bound 4 is strict: no structure at n=5

  CensusReport d = max_edges_no_long_cycle(5, 3, 5);
  REQUIRE(d.max_edges == 5);
  REQUIRE(d.bound_from_theorem == Rational(16, 3));
  REQUIRE(d.agreement);
}

TEST_CASE("census in path mode") {
  CensusReport a = max_edges_no_long_cycle(4, 3, 4, /*path_mode=*/true);
  REQUIRE(a.max_edges == 4);
  REQUIRE(a.extremal_count == 1);
  REQUIRE(a.extremal[0] == testutil::k4_cubed());
  REQUIRE(a.bound_from_theorem == Rational(4));
  REQUIRE(a.agreement);

  CensusReport b = max_edges_no_long_cycle(3, 3, 4, true);
  REQUIRE(b.max_edges == 1);
  REQUIRE(b.agreement);  // bound 3 unattainable: 3 is not a multiple of 4
}

TEST_CASE("census with graphs as a sanity anchor") {
  // forests on 4 labeled vertices: 16 spanning trees at the maximum
  CensusReport trees = max_edges_no_long_cycle(4, 2, 3);
  REQUIRE(trees.max_edges == 3);
  REQUIRE(trees.extremal_count == 16);
  REQUIRE_FALSE(trees.has_theorem_bound);

  // graphs on 4 vertices with no 3-edge path: triangles and stars
  CensusReport p3 = max_edges_no_long_cycle(4, 2, 3, true);
  REQUIRE(p3.max_edges == 3);
  REQUIRE(p3.extremal_count == 8);
}

TEST_CASE("degenerate census corners") {
  CensusReport tiny = max_edges_no_long_cycle(2, 3, 4);
  REQUIRE(tiny.max_edges == 0);
  REQUIRE(tiny.extremal_count == 1);
  REQUIRE(tiny.extremal[0].edge_count() == 0);
  REQUIRE(tiny.agreement);

  CensusReport empty_path = max_edges_no_long_cycle(0, 3, 4, true);
  REQUIRE(empty_path.max_edges == 0);
  REQUIRE(empty_path.agreement);  // 0 vertices: the empty structure exists

  REQUIRE_THROWS_AS(max_edges_no_long_cycle(9, 3, 4), PreconditionError);
  REQUIRE_THROWS_AS(max_edges_no_long_cycle(4, 1, 3), PreconditionError);
  REQUIRE_THROWS_AS(max_edges_no_long_cycle(4, 3, 1), PreconditionError);
}

TEST_CASE("witness list is a prefix of the extremal census") {
  CensusOptions opts;
  opts.witness_cap = 2;
  CensusReport c = max_edges_no_long_cycle(5, 3, 4, false, opts);
  REQUIRE(c.witnesses.size() == 2);
  REQUIRE(c.witnesses[0] == c.extremal[0]);
  REQUIRE(c.witnesses[1] == c.extremal[1]);
}

TEST_CASE("job count changes nothing observable") {
  CensusOptions serial;
  serial.jobs = 1;
  CensusOptions wide;
  wide.jobs = 3;
  CensusReport a = max_edges_no_long_cycle(5, 3, 4, false, serial);
  CensusReport b = max_edges_no_long_cycle(5, 3, 4, false, wide);
  REQUIRE(a.max_edges == b.max_edges);
  REQUIRE(a.extremal_count == b.extremal_count);
  REQUIRE(a.content_hash == b.content_hash);
  REQUIRE(a.extremal == b.extremal);
  REQUIRE(a.free_sets_visited == b.free_sets_visited);

  CensusReport c = max_edges_no_long_cycle(4, 3, 4, true, serial);
  CensusReport d = max_edges_no_long_cycle(4, 3, 4, true, wide);
  REQUIRE(c.content_hash == d.content_hash);
}

TEST_CASE("hashes separate different parameter sets") {
  CensusReport a = max_edges_no_long_cycle(4, 3, 4);
  CensusReport b = max_edges_no_long_cycle(4, 3, 3);
  CensusReport c = max_edges_no_long_cycle(4, 3, 4);
  REQUIRE(a.content_hash != b.content_hash);
  REQUIRE(a.content_hash == c.content_hash);
}

TEST_CASE("node cap cuts the census off") {
  CensusOptions strict;
  strict.node_cap = 3;
  REQUIRE_THROWS_AS(max_edges_no_long_cycle(4, 3, 4, false, strict), BudgetError);

  strict.node_cap = 10;
  REQUIRE_THROWS_AS(max_edges_no_long_cycle(4, 3, 4, false, strict), BudgetError);

  // the full run visits exactly 15 free sets, so 15 is enough
  strict.node_cap = 15;
  CensusReport fine = max_edges_no_long_cycle(4, 3, 4, false, strict);
  REQUIRE(fine.free_sets_visited == 15);
  REQUIRE(fine.max_edges == 3);
}

TEST_CASE("equality structure table") {
  REQUIRE(equality_structure_exists(4, 3, 4, false));
  REQUIRE(equality_structure_exists(7, 3, 4, false));
  REQUIRE(equality_structure_exists(1, 3, 4, false));
  REQUIRE_FALSE(equality_structure_exists(5, 3, 4, false));
  REQUIRE_FALSE(equality_structure_exists(0, 3, 4, false));

  REQUIRE(equality_structure_exists(4, 3, 4, true));
  REQUIRE(equality_structure_exists(8, 3, 4, true));
  REQUIRE(equality_structure_exists(0, 3, 4, true));
  REQUIRE_FALSE(equality_structure_exists(5, 3, 4, true));
  REQUIRE_FALSE(equality_structure_exists(1, 3, 4, true));
}

TEST_CASE("theorem verification rows") {
  TheoremReport five = verify_theorem(5, 3, 4, 5);
  REQUIRE(five.ok);
  REQUIRE(five.rows.size() == 2);
  REQUIRE(five.rows[0].census.max_edges == 3);
  REQUIRE(five.rows[0].equality_as_characterized);
  REQUIRE(five.rows[0].extremal_all_certified);
  REQUIRE(five.rows[1].census.max_edges == 3);
  REQUIRE(five.rows[1].violation.empty());

  TheoremReport six = verify_theorem(6, 3, 3, 4);
  REQUIRE(six.ok);

  TheoremReport four = verify_theorem(4, 3, 4, 5);
  REQUIRE(four.ok);
  REQUIRE(four.rows[0].census.max_edges == 4);

  REQUIRE_THROWS_AS(verify_theorem(7, 3, 4, 5), PreconditionError);
  REQUIRE_THROWS_AS(verify_theorem(5, 2, 4, 5), PreconditionError);
  REQUIRE_THROWS_AS(verify_theorem(5, 3, 5, 4), PreconditionError);
}
