#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "berge/lemma_paths.hpp"
#include "test_util.hpp"

using namespace berge;

namespace {

// every choice of inside edges in the given mode, as sets of r-subsets
std::vector<std::vector<Hyperedge>> all_inside_choices(int r,
                                                       SaturationMode mode) {
  std::vector<Hyperedge> universe = testutil::all_r_subsets(r + 1, r);
  int drop = mode == SaturationMode::kFull ? 1 : 2;
  std::vector<std::vector<Hyperedge>> out;
  int u = static_cast<int>(universe.size());
  for (int mask = 0; mask < (1 << u); ++mask) {
    if (__builtin_popcount(mask) != u - drop) continue;
    std::vector<Hyperedge> pick;
    for (int i = 0; i < u; ++i)
      if (mask & (1 << i)) pick.push_back(universe[i]);
    out.push_back(std::move(pick));
  }
  return out;
}

void exhaust(int r, SaturationMode mode) {
  const int want_len = mode == SaturationMode::kFull ? r : r - 1;
  for (const auto& inside : all_inside_choices(r, mode)) {
    std::vector<Vertex> s;
    for (Vertex v = 1; v <= r + 1; ++v) s.push_back(v);
    SaturatedSet ss(r, s, inside);
    REQUIRE(ss.mode() == mode);
    REQUIRE(saturated_shadow_is_complete(ss));
    Hypergraph host(r, r + 1, inside);
    for (Vertex u = 1; u <= r + 1; ++u)
      for (Vertex v = 1; v <= r + 1; ++v) {
        if (u == v) continue;
        BergePath p = saturated_path(ss, u, v);
        REQUIRE(p.length() == want_len);
        REQUIRE(p.vertices.front() == u);
        REQUIRE(p.vertices.back() == v);
        Validation check = validate_berge_path(host, p);
        INFO(check.reason);
        REQUIRE(check.ok);
      }
  }
}

}  // namespace

TEST_CASE("set construction rejects malformed input") {
  std::vector<Hyperedge> three{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}};

  REQUIRE_THROWS_AS(SaturatedSet(2, {1, 2, 3}, {{1, 2}, {2, 3}}),
                    PreconditionError);
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3}, three), PreconditionError);
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3, 4, 5}, three), PreconditionError);
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}}),
                    PreconditionError);
  REQUIRE_THROWS_AS(
      SaturatedSet(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}),
      PreconditionError);
  REQUIRE_THROWS_AS(
      SaturatedSet(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 3}, {1, 2, 4}}),
      PreconditionError);

  // two inside edges: NEAR for r = 3 is out of scope
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}}),
                    PreconditionError);
  // and 1 or 4 inside edges fit no mode at all
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3, 4}, {{1, 2, 3}}),
                    PreconditionError);
  REQUIRE_THROWS_AS(SaturatedSet(3, {1, 2, 3, 4},
                                 {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
                    PreconditionError);
}

TEST_CASE("modes classify by edge count") {
  SaturatedSet full(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  REQUIRE(full.mode() == SaturationMode::kFull);

  SaturatedSet near(4, {1, 2, 3, 4, 5},
                    {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}});
  REQUIRE(near.mode() == SaturationMode::kNear);
}

TEST_CASE("endpoint checks") {
  SaturatedSet ss(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  REQUIRE_THROWS_AS(saturated_path(ss, 2, 2), PreconditionError);
  REQUIRE_THROWS_AS(saturated_path(ss, 2, 5), PreconditionError);
}

TEST_CASE("the canonical example") {
  SaturatedSet ss(3, {1, 2, 3, 4}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
  BergePath p = saturated_path(ss, 2, 3);
  REQUIRE(p.vertices == std::vector<Vertex>{2, 1, 4, 3});
  REQUIRE(p.edges ==
          std::vector<Hyperedge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
}

TEST_CASE("every full set, every endpoint pair, r = 3") { exhaust(3, SaturationMode::kFull); }

TEST_CASE("every full set, every endpoint pair, r = 4") { exhaust(4, SaturationMode::kFull); }

TEST_CASE("every near set, every endpoint pair, r = 4") { exhaust(4, SaturationMode::kNear); }

TEST_CASE("set labels need not be contiguous") {
  SaturatedSet ss(3, {2, 5, 7, 9}, {{2, 5, 7}, {2, 5, 9}, {5, 7, 9}});
  BergePath p = saturated_path(ss, 9, 2);
  REQUIRE(p.length() == 3);
  Hypergraph host(3, 9, {{2, 5, 7}, {2, 5, 9}, {5, 7, 9}});
  REQUIRE(validate_berge_path(host, p).ok);
}
