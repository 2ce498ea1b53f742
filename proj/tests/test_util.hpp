#pragma once

// Shared helpers for the test binaries: deterministic random hypergraphs
// and small builders.

#include <algorithm>
#include <random>
#include <vector>

#include "berge/hypergraph.hpp"

namespace testutil {

inline std::vector<berge::Hyperedge> all_r_subsets(int n, int r) {
  std::vector<berge::Hyperedge> out;
  if (r > n || r <= 0) return out;
  berge::Hyperedge pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i + 1;
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i + 1) --i;
    if (i < 0) return out;
    ++pick[i];
    for (int t = i + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }
}

// m distinct edges drawn uniformly from all r-subsets of 1..n
inline berge::Hypergraph random_hypergraph(std::mt19937& rng, int n, int r,
                                           int m) {
  std::vector<berge::Hyperedge> universe = all_r_subsets(n, r);
  std::shuffle(universe.begin(), universe.end(), rng);
  m = std::min<int>(m, static_cast<int>(universe.size()));
  universe.resize(m);
  return berge::Hypergraph(r, n, std::move(universe));
}

inline berge::Hypergraph k4_cubed() {
  return berge::Hypergraph(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// two K_4^3 blocks sharing vertex 4
inline berge::Hypergraph double_block() {
  return berge::Hypergraph(3, 7,
                           {{1, 2, 3},
                            {1, 2, 4},
                            {1, 3, 4},
                            {2, 3, 4},
                            {4, 5, 6},
                            {4, 5, 7},
                            {4, 6, 7},
                            {5, 6, 7}});
}

}  // namespace testutil
