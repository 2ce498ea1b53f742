#pragma once

// Block decomposition of a shadow graph: maximal 2-connected subgraphs,
// with a bridge forming a 2-vertex block. Cut vertices are exactly the
// vertices lying in more than one block.

#include <algorithm>
#include <map>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct BlockDecomposition {
  // Vertex set of each block, sorted; blocks ordered by smallest vertex,
  // ties broken lexicographically. Isolated vertices belong to no block.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // ascending
  // For every cut vertex, the indices into `blocks` that share it.
  std::map<Vertex, std::vector<int>> blocks_at_cut;
};

// Standard lowpoint search with an explicit stack of half-edges; when a
// child subtree cannot reach above the current vertex, the edges popped off
// the stack form one block.
inline BlockDecomposition block_decomposition(const ShadowGraph& g) {
  BlockDecomposition out;
  const int n = g.n;
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<std::pair<Vertex, Vertex>> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next_child;
  };

  auto emit_block = [&](Vertex v, Vertex w) {
    std::vector<Vertex> members;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      members.push_back(a);
      members.push_back(b);
      if ((a == v && b == w) || (a == w && b == v)) break;
    }
    out.blocks.push_back(detail::sorted_unique(std::move(members)));
  };

  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, 0, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_child < g.adj[f.v].size()) {
        Vertex w = g.adj[f.v][f.next_child++];
        if (!disc[w]) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex w = f.v;
        stack.pop_back();
        if (stack.empty()) break;
        Vertex v = stack.back().v;
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) emit_block(v, w);
      }
    }
  }

  std::sort(out.blocks.begin(), out.blocks.end());
  std::vector<int> seen_in(n + 1, 0);
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
    for (Vertex v : out.blocks[i])
      if (++seen_in[v] == 2) out.cut_vertices.push_back(v);
  std::sort(out.cut_vertices.begin(), out.cut_vertices.end());
  for (Vertex c : out.cut_vertices)
    for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i)
      if (std::binary_search(out.blocks[i].begin(), out.blocks[i].end(), c))
        out.blocks_at_cut[c].push_back(i);
  return out;
}

}  // namespace berge
