#pragma once

// Berge path/cycle witnesses, their validation and text form, and exact
// backtracking searches. A Berge cycle of length l is l distinct vertices
// v_1..v_l plus l distinct hyperedges e_1..e_l with {v_i, v_{i+1}} in e_i,
// indices mod l; a Berge path of length l drops the closing edge and has
// l+1 vertices. Minimum cycle length is 2 (two vertices, two edges).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

struct BergePath {
  std::vector<Vertex> vertices;  // length + 1 of them; one vertex, no edges
                                 // is the degenerate length-0 path
  std::vector<Hyperedge> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

struct BergeCycle {
  std::vector<Vertex> vertices;  // edges[i] connects vertices[i] and
  std::vector<Hyperedge> edges;  // vertices[(i+1) % l]
  int length() const { return static_cast<int>(edges.size()); }
};

struct Validation {
  bool ok = false;
  std::string reason;  // empty when ok
};

namespace detail {

inline bool pair_in(const Hyperedge& e, Vertex a, Vertex b) {
  return std::binary_search(e.begin(), e.end(), a) &&
         std::binary_search(e.begin(), e.end(), b);
}

inline Validation validate_walk(const Hypergraph& h,
                                const std::vector<Vertex>& vs,
                                const std::vector<Hyperedge>& es, bool cyclic) {
  if (cyclic) {
    if (vs.size() < 2) return {false, "cycle shorter than 2"};
    if (vs.size() != es.size()) return {false, "vertex/edge count mismatch"};
  } else {
    if (vs.empty()) return {false, "empty path"};
    if (vs.size() != es.size() + 1) return {false, "vertex/edge count mismatch"};
  }
  for (Vertex v : vs)
    if (v < 1 || v > h.n()) return {false, "vertex label out of range"};
  std::vector<Vertex> vsorted(vs);
  std::sort(vsorted.begin(), vsorted.end());
  if (std::adjacent_find(vsorted.begin(), vsorted.end()) != vsorted.end())
    return {false, "duplicate vertex"};
  std::vector<Hyperedge> esorted(es);
  std::sort(esorted.begin(), esorted.end());
  if (std::adjacent_find(esorted.begin(), esorted.end()) != esorted.end())
    return {false, "duplicate edge"};
  for (const Hyperedge& e : es)
    if (!h.has_edge(e)) return {false, "edge not in the hypergraph"};
  for (std::size_t i = 0; i < es.size(); ++i) {
    Vertex a = vs[i];
    Vertex b = vs[(i + 1) % vs.size()];
    if (!pair_in(es[i], a, b)) return {false, "consecutive pair not inside its edge"};
  }
  return {true, ""};
}

}  // namespace detail

inline Validation validate_berge_path(const Hypergraph& h, const BergePath& p) {
  return detail::validate_walk(h, p.vertices, p.edges, false);
}

inline Validation validate_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
  return detail::validate_walk(h, c.vertices, c.edges, true);
}

// Text form: "v1 [a b c] v2 [d e f] v3" for paths; cycles end with the
// closing edge, "v1 [..] v2 [..]". The trailing token kind tells them apart.
namespace detail {

inline std::string walk_to_text(const std::vector<Vertex>& vs,
                                const std::vector<Hyperedge>& es) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ' ';
    out << vs[i];
    if (i < es.size()) {
      out << " [";
      for (std::size_t j = 0; j < es[i].size(); ++j) {
        if (j) out << ' ';
        out << es[i][j];
      }
      out << ']';
    }
  }
  return out.str();
}

inline void walk_from_text(const std::string& text, std::vector<Vertex>& vs,
                           std::vector<Hyperedge>& es) {
  vs.clear();
  es.clear();
  std::istringstream in(text);
  std::string tok;
  bool in_edge = false;
  Hyperedge cur;
  while (in >> tok) {
    while (!tok.empty() && tok.front() == '[') {
      if (in_edge) throw ParseError("nested '[' in witness");
      in_edge = true;
      cur.clear();
      tok.erase(tok.begin());
    }
    bool closes = false;
    while (!tok.empty() && tok.back() == ']') {
      closes = true;
      tok.pop_back();
    }
    if (!tok.empty()) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad token in witness");
      }
      if (used != tok.size()) throw ParseError("bad token in witness");
      if (in_edge)
        cur.push_back(v);
      else
        vs.push_back(v);
    }
    if (closes) {
      if (!in_edge) throw ParseError("unmatched ']' in witness");
      in_edge = false;
      std::sort(cur.begin(), cur.end());
      es.push_back(cur);
    }
  }
  if (in_edge) throw ParseError("unterminated edge in witness");
}

}  // namespace detail

inline std::string to_text(const BergePath& p) {
  return detail::walk_to_text(p.vertices, p.edges);
}

inline std::string to_text(const BergeCycle& c) {
  return detail::walk_to_text(c.vertices, c.edges);
}

inline BergePath parse_berge_path(const std::string& text) {
  BergePath p;
  detail::walk_from_text(text, p.vertices, p.edges);
  if (p.vertices.size() != p.edges.size() + 1)
    throw ParseError("path text must end with a vertex");
  return p;
}

inline BergeCycle parse_berge_cycle(const std::string& text) {
  BergeCycle c;
  detail::walk_from_text(text, c.vertices, c.edges);
  if (c.vertices.size() != c.edges.size())
    throw ParseError("cycle text must end with the closing edge");
  return c;
}

// System-of-distinct-representatives assignment: an injection from the
// ordered pair list into the candidate edges, each pair landing inside its
// edge. Augmenting-path matching, scanning candidates in lexicographic
// order so ties resolve toward the smallest edge.
struct PairAssignment {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<Hyperedge> edges;  // edges[i] represents pairs[i]
};

namespace detail {

// Incremental pair->edge matching used by the searchers. Pairs are pushed
// and popped stack-wise; each push runs one augmentation and the matching
// snapshot is restored on pop, so backtracking is exact.
class IncrementalSdr {
 public:
  explicit IncrementalSdr(const std::vector<Hyperedge>* edges) : edges_(edges) {
    owner_.assign(edges_->size(), -1);
  }

  bool push(Vertex a, Vertex b) {
    saved_owner_.push_back(owner_);
    saved_match_.push_back(match_);
    pairs_.emplace_back(a, b);
    match_.push_back(-1);
    std::vector<char> visited(edges_->size(), 0);
    if (augment(static_cast<int>(pairs_.size()) - 1, visited)) return true;
    pop();
    return false;
  }

  void pop() {
    pairs_.pop_back();
    owner_ = std::move(saved_owner_.back());
    saved_owner_.pop_back();
    match_ = std::move(saved_match_.back());
    saved_match_.pop_back();
  }

  // Edge index matched to pair slot i.
  int matched_edge(int i) const { return match_[i]; }
  int size() const { return static_cast<int>(pairs_.size()); }

 private:
  bool augment(int slot, std::vector<char>& visited) {
    auto [a, b] = pairs_[slot];
    for (int e = 0; e < static_cast<int>(edges_->size()); ++e) {
      if (visited[e] || !pair_in((*edges_)[e], a, b)) continue;
      visited[e] = 1;
      if (owner_[e] < 0 || augment(owner_[e], visited)) {
        owner_[e] = slot;
        match_[slot] = e;
        return true;
      }
    }
    return false;
  }

  const std::vector<Hyperedge>* edges_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<int> match_;  // slot -> edge index
  std::vector<int> owner_;  // edge index -> slot
  std::vector<std::vector<int>> saved_owner_;
  std::vector<std::vector<int>> saved_match_;
};

}  // namespace detail

inline std::optional<PairAssignment> sdr_assign(
    const std::vector<std::pair<Vertex, Vertex>>& pairs,
    const std::vector<Hyperedge>& candidates) {
  std::vector<Hyperedge> pool(candidates);
  for (Hyperedge& e : pool) std::sort(e.begin(), e.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  detail::IncrementalSdr sdr(&pool);
  for (auto [a, b] : pairs)
    if (!sdr.push(a, b)) return std::nullopt;
  PairAssignment out;
  out.pairs = pairs;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i)
    out.edges.push_back(pool[sdr.matched_edge(i)]);
  return out;
}

enum class SearchStatus { kFound, kNoneExists, kBudgetExhausted };

inline constexpr long long kNoBudget = -1;

struct CycleSearchResult {
  SearchStatus status = SearchStatus::kNoneExists;
  std::optional<BergeCycle> cycle;
  long long nodes_expanded = 0;
};

struct PathSearchResult {
  SearchStatus status = SearchStatus::kNoneExists;
  std::optional<BergePath> path;
  long long nodes_expanded = 0;
  bool degenerate_single_vertex = false;  // length-0 path on an edgeless host
};

namespace detail {

// Depth-first walk over shadow adjacency. Each step pushes the new
// consecutive pair into the incremental matching; an unsaturable pair set
// can never become saturable again, so failed pushes prune soundly.
class CycleSearcher {
 public:
  CycleSearcher(const Hypergraph& h, int k, long long budget)
      : h_(h), shadow_(two_shadow(h)), k_(std::max(k, 2)), budget_(budget),
        sdr_(&h.edges()) {}

  CycleSearchResult run() {
    CycleSearchResult res;
    if (k_ > std::min(h_.n(), h_.edge_count())) {
      res.nodes_expanded = expanded_;
      return res;
    }
    on_path_.assign(h_.n() + 1, 0);
    for (Vertex s = 1; s <= h_.n(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      bool out_of_budget = !dfs();
      on_path_[s] = 0;
      if (found_) {
        res.status = SearchStatus::kFound;
        res.cycle = std::move(witness_);
        res.nodes_expanded = expanded_;
        return res;
      }
      if (out_of_budget) {
        res.status = SearchStatus::kBudgetExhausted;
        res.nodes_expanded = expanded_;
        return res;
      }
    }
    res.nodes_expanded = expanded_;
    return res;
  }

 private:
  bool dfs() {
    if (budget_ != kNoBudget && expanded_ >= budget_) return false;
    ++expanded_;
    Vertex u = path_.back();
    Vertex s = path_.front();
    if (static_cast<int>(path_.size()) >= k_ && shadow_.has_pair(u, s) &&
        sdr_.push(u, s)) {
      found_ = true;
      witness_ = extract();
      return true;
    }
    for (Vertex w : shadow_.adj[u]) {
      if (w <= s || on_path_[w]) continue;  // path start is the cycle minimum
      if (!sdr_.push(u, w)) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      bool ok = dfs();
      on_path_[w] = 0;
      path_.pop_back();
      if (found_) return true;
      sdr_.pop();
      if (!ok) return false;
    }
    return true;
  }

  BergeCycle extract() const {
    BergeCycle c;
    c.vertices = path_;
    for (int i = 0; i < sdr_.size(); ++i)
      c.edges.push_back(h_.edge(sdr_.matched_edge(i)));
    return c;
  }

  const Hypergraph& h_;
  ShadowGraph shadow_;
  int k_;
  long long budget_;
  long long expanded_ = 0;
  IncrementalSdr sdr_;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  bool found_ = false;
  BergeCycle witness_;
};

}  // namespace detail

// Exhaustive search for a Berge cycle of length >= k. kNoneExists is a
// proof of absence; kBudgetExhausted only means the node budget ran out.
inline CycleSearchResult find_berge_cycle_at_least(const Hypergraph& h, int k,
                                                   long long budget = kNoBudget) {
  return detail::CycleSearcher(h, k, budget).run();
}

struct LongestCycleResult {
  SearchStatus status = SearchStatus::kNoneExists;  // kNoneExists: acyclic
  std::optional<BergeCycle> cycle;
  long long nodes_expanded = 0;
};

// Descending scan: the first k with a hit is the maximum cycle length,
// since the k+1 pass already proved nothing longer exists.
inline LongestCycleResult longest_berge_cycle(const Hypergraph& h,
                                              long long budget = kNoBudget) {
  LongestCycleResult res;
  for (int k = std::min(h.n(), h.edge_count()); k >= 2; --k) {
    long long left = budget == kNoBudget ? kNoBudget : budget - res.nodes_expanded;
    CycleSearchResult step = find_berge_cycle_at_least(h, k, left);
    res.nodes_expanded += step.nodes_expanded;
    if (step.status == SearchStatus::kBudgetExhausted) {
      res.status = step.status;
      return res;
    }
    if (step.status == SearchStatus::kFound) {
      res.status = step.status;
      res.cycle = std::move(step.cycle);
      return res;
    }
  }
  return res;
}

namespace detail {

class PathSearcher {
 public:
  PathSearcher(const Hypergraph& h, long long budget)
      : h_(h), shadow_(two_shadow(h)), budget_(budget), sdr_(&h.edges()) {}

  PathSearchResult run() {
    PathSearchResult res;
    if (h_.n() == 0) return res;
    res.status = SearchStatus::kFound;
    best_ = {{1}, {}};
    on_path_.assign(h_.n() + 1, 0);
    for (Vertex s = 1; s <= h_.n(); ++s) {
      path_.assign(1, s);
      on_path_[s] = 1;
      bool ok = dfs();
      on_path_[s] = 0;
      if (!ok) {
        res.status = SearchStatus::kBudgetExhausted;
        break;
      }
    }
    res.nodes_expanded = expanded_;
    res.degenerate_single_vertex = best_.edges.empty();
    res.path = std::move(best_);
    return res;
  }

 private:
  bool dfs() {
    if (budget_ != kNoBudget && expanded_ >= budget_) return false;
    ++expanded_;
    if (static_cast<int>(path_.size()) > static_cast<int>(best_.vertices.size())) {
      best_.vertices = path_;
      best_.edges.clear();
      for (int i = 0; i < sdr_.size(); ++i)
        best_.edges.push_back(h_.edge(sdr_.matched_edge(i)));
    }
    Vertex u = path_.back();
    for (Vertex w : shadow_.adj[u]) {
      if (on_path_[w] || !sdr_.push(u, w)) continue;
      path_.push_back(w);
      on_path_[w] = 1;
      bool ok = dfs();
      on_path_[w] = 0;
      path_.pop_back();
      sdr_.pop();
      if (!ok) return false;
    }
    return true;
  }

  const Hypergraph& h_;
  ShadowGraph shadow_;
  long long budget_;
  long long expanded_ = 0;
  IncrementalSdr sdr_;
  std::vector<Vertex> path_;
  std::vector<char> on_path_;
  BergePath best_;
};

}  // namespace detail

// Longest Berge path. On an edgeless host with n >= 1 the result is the
// degenerate single-vertex path of length 0, flagged as such.
inline PathSearchResult longest_berge_path(const Hypergraph& h,
                                           long long budget = kNoBudget) {
  return detail::PathSearcher(h, budget).run();
}

}  // namespace berge
