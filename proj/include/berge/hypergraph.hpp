#pragma once

// Core r-uniform hypergraph type plus the structural operations everything
// else builds on: 2-shadow, induced subhypergraphs, set contraction,
// connectivity and cut-hyperedge tests, and the plain-text file format.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berge {

using Vertex = int;
using Hyperedge = std::vector<Vertex>;  // kept sorted ascending

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertices are labeled 1..n. Edges are r distinct labels, stored with
// vertices ascending and the edge list in lexicographic order. Duplicate
// edges are rejected outright.
class Hypergraph {
 public:
  Hypergraph(int r, int n, std::vector<Hyperedge> edges)
      : r_(r), n_(n), edges_(std::move(edges)) {
    if (r_ < 2) throw ParseError("uniformity r must be at least 2");
    if (n_ < 0) throw ParseError("vertex count n must be nonnegative");
    for (Hyperedge& e : edges_) {
      std::sort(e.begin(), e.end());
      if (static_cast<int>(e.size()) != r_)
        throw ParseError("hyperedge has wrong size");
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw ParseError("duplicate vertex in hyperedge");
      if (e.front() < 1 || e.back() > n_)
        throw ParseError("vertex label out of range 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw ParseError("duplicate hyperedge");
    incident_.assign(n_ + 1, {});
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
      for (Vertex v : edges_[i]) incident_[v].push_back(i);
  }

  int r() const { return r_; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(int id) const { return edges_[id]; }

  // Edge ids of the hyperedges containing v, ascending.
  const std::vector<int>& incident_ids(Vertex v) const { return incident_[v]; }

  bool has_edge(const Hyperedge& sorted_e) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_e);
  }

  bool operator==(const Hypergraph& o) const {
    return r_ == o.r_ && n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int r_;
  int n_;
  std::vector<Hyperedge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Graph of all vertex pairs covered by at least one hyperedge.
struct ShadowGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // a < b, lexicographic
  std::vector<std::vector<Vertex>> adj;          // 1-based, each list ascending

  bool has_pair(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  }
  int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
};

inline ShadowGraph two_shadow(const Hypergraph& h) {
  ShadowGraph g;
  g.n = h.n();
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Hyperedge& e : h.edges())
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        seen.emplace(e[i], e[j]);
  g.pairs.assign(seen.begin(), seen.end());
  g.adj.assign(g.n + 1, {});
  for (auto [a, b] : g.pairs) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

namespace detail {

inline std::vector<Vertex> sorted_unique(std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

// Edges entirely inside S. With relabel=false the vertex universe stays
// 1..n (vertices outside S just lose all their edges); with relabel=true
// the members of S are renamed 1..|S| in ascending order.
inline Hypergraph induced_sub(const Hypergraph& h, const std::vector<Vertex>& s,
                              bool relabel = false) {
  std::vector<Vertex> keep = detail::sorted_unique(s);
  if (!keep.empty() && (keep.front() < 1 || keep.back() > h.n()))
    throw PreconditionError("induced_sub: set is not a subset of the vertices");
  std::vector<char> in(h.n() + 1, 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<Hyperedge> kept;
  for (const Hyperedge& e : h.edges()) {
    bool inside = true;
    for (Vertex v : e) inside = inside && in[v];
    if (inside) kept.push_back(e);
  }
  if (!relabel) return Hypergraph(h.r(), h.n(), std::move(kept));
  std::vector<Vertex> name(h.n() + 1, 0);
  for (std::size_t i = 0; i < keep.size(); ++i) name[keep[i]] = static_cast<Vertex>(i + 1);
  for (Hyperedge& e : kept)
    for (Vertex& v : e) v = name[v];
  return Hypergraph(h.r(), static_cast<int>(keep.size()), std::move(kept));
}

// Collapse S to a single vertex named min(S), then compact labels to 1..n'.
// Every hyperedge must lie inside S or meet it in at most one vertex; edges
// inside S are dropped, edges meeting it in one vertex have that vertex
// renamed. Requires that no two surviving edges collapse onto each other.
inline Hypergraph contract_set(const Hypergraph& h, const std::vector<Vertex>& s) {
  std::vector<Vertex> set = detail::sorted_unique(s);
  if (set.empty()) throw PreconditionError("contract_set: empty set");
  if (set.front() < 1 || set.back() > h.n())
    throw PreconditionError("contract_set: set is not a subset of the vertices");
  std::vector<char> in(h.n() + 1, 0);
  for (Vertex v : set) in[v] = 1;
  const Vertex merged = set.front();

  std::vector<Vertex> survivors;
  for (Vertex v = 1; v <= h.n(); ++v)
    if (!in[v] || v == merged) survivors.push_back(v);
  std::vector<Vertex> name(h.n() + 1, 0);
  for (std::size_t i = 0; i < survivors.size(); ++i)
    name[survivors[i]] = static_cast<Vertex>(i + 1);

  std::vector<Hyperedge> out;
  for (const Hyperedge& e : h.edges()) {
    int hits = 0;
    for (Vertex v : e) hits += in[v];
    if (hits == static_cast<int>(e.size())) continue;  // swallowed by S
    if (hits > 1)
      throw PreconditionError("contract_set: hyperedge straddles the set");
    Hyperedge mapped;
    for (Vertex v : e) mapped.push_back(name[in[v] ? merged : v]);
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw PreconditionError("contract_set: contraction would merge two hyperedges");
  return Hypergraph(h.r(), static_cast<int>(survivors.size()), std::move(out));
}

// Connectivity of the 2-shadow over all n vertices. A single vertex counts
// as connected; for n >= 2 an isolated vertex disconnects the shadow unless
// ignore_isolated is set, in which case only the non-isolated vertices must
// form one component.
inline bool is_connected(const Hypergraph& h, bool ignore_isolated = false) {
  if (h.n() <= 1) return true;
  ShadowGraph g = two_shadow(h);
  std::vector<Vertex> active;
  for (Vertex v = 1; v <= g.n; ++v)
    if (g.degree(v) > 0) active.push_back(v);
  if (!ignore_isolated && static_cast<int>(active.size()) != h.n()) return false;
  if (active.empty()) return ignore_isolated;
  std::vector<char> seen(g.n + 1, 0);
  std::vector<Vertex> stack{active.front()};
  seen[active.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == active.size();
}

// Hyperedges whose removal disconnects the shadow over all n vertices
// (stranding a vertex with no remaining pairs counts). Requires a connected
// input; results come back in lexicographic order.
inline std::vector<Hyperedge> cut_hyperedges(const Hypergraph& h) {
  if (!is_connected(h))
    throw PreconditionError("cut_hyperedges: hypergraph is not connected");
  std::vector<Hyperedge> cuts;
  for (int skip = 0; skip < h.edge_count(); ++skip) {
    std::vector<Hyperedge> rest;
    for (int i = 0; i < h.edge_count(); ++i)
      if (i != skip) rest.push_back(h.edge(i));
    Hypergraph sub(h.r(), h.n(), std::move(rest));
    if (!is_connected(sub)) cuts.push_back(h.edge(skip));
  }
  return cuts;
}

// Plain-text format. First data line "r n", then one hyperedge per line as
// r space-separated labels. '#' starts a comment; blank lines are skipped.
inline Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  int r = 0, n = 0;
  std::vector<Hyperedge> edges;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<long long> nums;
    long long x;
    if (!(row >> x)) {
      std::string junk;
      if (row.clear(), row >> junk)
        throw ParseError("non-numeric token in input");
      continue;  // blank or comment-only line
    }
    nums.push_back(x);
    while (row >> x) nums.push_back(x);
    std::string junk;
    if (row.clear(), row >> junk) throw ParseError("non-numeric token in input");
    if (!have_header) {
      if (nums.size() != 2) throw ParseError("malformed header, expected \"r n\"");
      r = static_cast<int>(nums[0]);
      n = static_cast<int>(nums[1]);
      have_header = true;
      continue;
    }
    if (static_cast<int>(nums.size()) != r) throw ParseError("hyperedge has wrong size");
    Hyperedge e;
    for (long long v : nums) e.push_back(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  }
  if (!have_header) throw ParseError("malformed header, expected \"r n\"");
  return Hypergraph(r, n, std::move(edges));
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.r() << ' ' << h.n() << '\n';
  for (const Hyperedge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace berge
