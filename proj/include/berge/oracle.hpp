#pragma once

// Ground truth by sheer enumeration. Everything here re-derives Berge
// structure from the definition alone: subsets, cyclic orders, try-all
// representative assignments. None of the backtracking searcher's logic is
// reused, so agreement between the two routes is meaningful evidence.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace oracle_detail {

using Mask = std::uint64_t;

inline Mask vbit(Vertex v) { return Mask{1} << (v - 1); }

inline std::vector<Mask> edge_masks(const std::vector<Hyperedge>& edges) {
  std::vector<Mask> out;
  out.reserve(edges.size());
  for (const Hyperedge& e : edges) {
    Mask m = 0;
    for (Vertex v : e) m |= vbit(v);
    out.push_back(m);
  }
  return out;
}

// Try-all assignment of cyclically consecutive pairs to distinct edges.
inline bool assign_cycle_pairs(const std::vector<Vertex>& seq,
                               const std::vector<Mask>& masks, std::size_t at,
                               Mask used_edges) {
  if (at == seq.size()) return true;
  const Vertex a = seq[at];
  const Vertex b = seq[(at + 1) % seq.size()];
  const Mask need = vbit(a) | vbit(b);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (used_edges & (Mask{1} << i)) continue;
    if ((masks[i] & need) != need) continue;
    if (assign_cycle_pairs(seq, masks, at + 1, used_edges | (Mask{1} << i)))
      return true;
  }
  return false;
}

inline bool assign_path_pairs(const std::vector<Vertex>& seq,
                              const std::vector<Mask>& masks, std::size_t at,
                              Mask used_edges) {
  if (at + 1 == seq.size()) return true;
  const Mask need = vbit(seq[at]) | vbit(seq[at + 1]);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (used_edges & (Mask{1} << i)) continue;
    if ((masks[i] & need) != need) continue;
    if (assign_path_pairs(seq, masks, at + 1, used_edges | (Mask{1} << i)))
      return true;
  }
  return false;
}

// All arrangements of pool as seq[at..], recursing into the tester at full
// length. For cycles the first slot is pinned and reflection is halved by
// requiring seq[1] < seq.back() once all slots are filled.
inline bool arrange_and_test(std::vector<Vertex>& seq, std::vector<Vertex>& pool,
                             std::size_t at, const std::vector<Mask>& masks,
                             bool cyclic) {
  if (at == seq.size()) {
    if (cyclic && seq.size() >= 3 && seq[1] > seq.back()) return false;
    if (!cyclic && seq.front() > seq.back()) return false;
    return cyclic ? assign_cycle_pairs(seq, masks, 0, 0)
                  : assign_path_pairs(seq, masks, 0, 0);
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Vertex v = pool[i];
    if (v == 0) continue;
    pool[i] = 0;
    seq[at] = v;
    if (arrange_and_test(seq, pool, at + 1, masks, cyclic)) {
      pool[i] = v;
      return true;
    }
    pool[i] = v;
  }
  return false;
}

inline bool subset_has_arrangement(const std::vector<Vertex>& subset,
                                   const std::vector<Mask>& masks, bool cyclic) {
  std::vector<Vertex> seq(subset.size(), 0);
  if (cyclic) {
    seq[0] = subset[0];  // rotation pinned to the smallest vertex
    std::vector<Vertex> pool(subset.begin() + 1, subset.end());
    return arrange_and_test(seq, pool, 1, masks, true);
  }
  std::vector<Vertex> pool(subset);
  return arrange_and_test(seq, pool, 0, masks, false);
}

// All size-c subsets of 1..n, lexicographic, fed to the callback until it
// reports success.
template <typename F>
inline bool for_each_subset(int n, int c, F&& test) {
  if (c <= 0 || c > n) return false;
  std::vector<Vertex> pick(c);
  for (int i = 0; i < c; ++i) pick[i] = i + 1;
  while (true) {
    if (test(pick)) return true;
    int i = c - 1;
    while (i >= 0 && pick[i] == n - c + i + 1) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int t = i + 1; t < c; ++t) pick[t] = pick[t - 1] + 1;
  }
}

constexpr int kBruteForceCap = 8;

}  // namespace oracle_detail

// Longest Berge cycle by literal definition: every vertex subset, every
// cyclic order up to rotation and reflection, every way of assigning
// consecutive pairs to distinct hyperedges. nullopt when no cycle exists.
inline std::optional<int> brute_force_longest_cycle(
    const Hypergraph& h, int cap = oracle_detail::kBruteForceCap) {
  if (h.n() > cap)
    throw PreconditionError("brute_force_longest_cycle: vertex count exceeds cap");
  const std::vector<oracle_detail::Mask> masks = oracle_detail::edge_masks(h.edges());
  for (int l = std::min(h.n(), h.edge_count()); l >= 2; --l) {
    bool found = oracle_detail::for_each_subset(
        h.n(), l, [&](const std::vector<Vertex>& subset) {
          return oracle_detail::subset_has_arrangement(subset, masks, true);
        });
    if (found) return l;
  }
  return std::nullopt;
}

// Longest Berge path; 0 means only the degenerate single vertex exists,
// nullopt means there are no vertices at all.
inline std::optional<int> brute_force_longest_path(
    const Hypergraph& h, int cap = oracle_detail::kBruteForceCap) {
  if (h.n() > cap)
    throw PreconditionError("brute_force_longest_path: vertex count exceeds cap");
  if (h.n() == 0) return std::nullopt;
  const std::vector<oracle_detail::Mask> masks = oracle_detail::edge_masks(h.edges());
  for (int l = std::min(h.n() - 1, h.edge_count()); l >= 1; --l) {
    bool found = oracle_detail::for_each_subset(
        h.n(), l + 1, [&](const std::vector<Vertex>& subset) {
          return oracle_detail::subset_has_arrangement(subset, masks, false);
        });
    if (found) return l;
  }
  return 0;
}

namespace oracle_detail {

// Census-local incremental checks. The invariant "the current edge set is
// structure-free" means any new long cycle or path must ride the candidate
// edge, so the cycle check pins it as the closing edge and searches the old
// set for a long enough connecting path.

struct IncrementalContext {
  int n = 0;
  int k = 0;
  std::vector<Mask> old_masks;  // edges already in the set
};

inline bool old_path_reaches(const IncrementalContext& ctx, Vertex cur,
                             Vertex target, int count, Mask used_v,
                             Mask used_e) {
  for (std::size_t i = 0; i < ctx.old_masks.size(); ++i) {
    if (used_e & (Mask{1} << i)) continue;
    const Mask em = ctx.old_masks[i];
    if (!(em & vbit(cur))) continue;
    for (Vertex w = 1; w <= ctx.n; ++w) {
      if (!(em & vbit(w)) || (used_v & vbit(w))) continue;
      if (w == target) {
        if (count + 1 >= ctx.k) return true;
        continue;
      }
      if (old_path_reaches(ctx, w, target, count + 1, used_v | vbit(w),
                           used_e | (Mask{1} << i)))
        return true;
    }
  }
  return false;
}

inline bool creates_long_cycle(const IncrementalContext& ctx,
                               const Hyperedge& candidate) {
  for (std::size_t i = 0; i < candidate.size(); ++i)
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      const Vertex a = candidate[i], b = candidate[j];
      if (old_path_reaches(ctx, a, b, 1, vbit(a), 0)) return true;
    }
  return false;
}

inline bool any_path_with_edges(const IncrementalContext& ctx,
                                const std::vector<Mask>& all, Vertex cur,
                                int edges_used, Mask used_v, Mask used_e) {
  if (edges_used == ctx.k) return true;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (used_e & (Mask{1} << i)) continue;
    const Mask em = all[i];
    if (!(em & vbit(cur))) continue;
    for (Vertex w = 1; w <= ctx.n; ++w) {
      if (!(em & vbit(w)) || (used_v & vbit(w))) continue;
      if (any_path_with_edges(ctx, all, w, edges_used + 1, used_v | vbit(w),
                              used_e | (Mask{1} << i)))
        return true;
    }
  }
  return false;
}

inline bool creates_long_path(const IncrementalContext& ctx,
                              const Hyperedge& candidate) {
  std::vector<Mask> all(ctx.old_masks);
  Mask cm = 0;
  for (Vertex v : candidate) cm |= vbit(v);
  all.push_back(cm);
  for (Vertex s = 1; s <= ctx.n; ++s)
    if (any_path_with_edges(ctx, all, s, 0, vbit(s), 0)) return true;
  return false;
}

inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

}  // namespace oracle_detail

struct CensusParams {
  int n = 0;
  int r = 0;
  int k = 0;
  bool path_mode = false;
};

struct CensusOptions {
  int jobs = 1;
  int witness_cap = 4;
  long long node_cap = -1;  // visited free sets; -1 = unlimited
};

struct CensusReport {
  CensusParams params;
  int max_edges = 0;
  long long extremal_count = 0;
  long long free_sets_visited = 0;
  std::vector<Hypergraph> extremal;   // every maximum free set, lexicographic
  std::vector<Hypergraph> witnesses;  // first few of the above
  // The theorem bound applies only to k = r+1 / r+2 (cycles) or k = r+1
  // (paths) with r >= 3; other parameters still census fine without it.
  bool has_theorem_bound = false;
  Rational bound_from_theorem;
  bool agreement = true;
  std::uint64_t content_hash = 0;
};

// The equality configurations are trees of b K_{r+1} blocks (n = b r + 1,
// b = 0 allowed) for the cycle bounds, and disjoint unions of K_{r+1}^r
// components (n = b (r+1)) for the path bound.
inline bool equality_structure_exists(int n, int r, int k, bool path_mode) {
  (void)k;
  if (path_mode) return n % (r + 1) == 0;
  return n >= 1 && (n - 1) % r == 0;
}

namespace oracle_detail {

struct CensusAccum {
  int max_size = 0;
  std::vector<std::vector<int>> extremal{{}};  // edge-index sets
  long long visited = 0;
};

struct CensusSpace {
  int n = 0;
  int k = 0;
  bool path_mode = false;
  std::vector<Hyperedge> universe;  // all r-subsets of 1..n, lexicographic
  std::vector<Mask> universe_masks;
  long long node_cap = -1;
  std::atomic<long long>* visited = nullptr;  // shared cap counter
};

inline bool creates_structure(const CensusSpace& space,
                              const std::vector<int>& set, int candidate) {
  IncrementalContext ctx;
  ctx.n = space.n;
  ctx.k = space.k;
  for (int idx : set) ctx.old_masks.push_back(space.universe_masks[idx]);
  if (space.path_mode)
    return creates_long_path(ctx, space.universe[candidate]);
  return creates_long_cycle(ctx, space.universe[candidate]);
}

inline void census_note(CensusAccum& acc, const std::vector<int>& set) {
  const int size = static_cast<int>(set.size());
  if (size > acc.max_size) {
    acc.max_size = size;
    acc.extremal.clear();
  }
  if (size == acc.max_size) acc.extremal.push_back(set);
}

inline void census_dfs(const CensusSpace& space, CensusAccum& acc,
                       std::vector<int>& set, int last) {
  ++acc.visited;
  if (space.node_cap >= 0 &&
      space.visited->fetch_add(1, std::memory_order_relaxed) + 1 > space.node_cap)
    throw BudgetError("census: node cap exceeded");
  census_note(acc, set);
  const int m = static_cast<int>(space.universe.size());
  for (int t = last + 1; t < m; ++t) {
    if (creates_structure(space, set, t)) continue;
    set.push_back(t);
    census_dfs(space, acc, set, t);
    set.pop_back();
  }
}

inline void merge_accum(CensusAccum& into, const CensusAccum& part) {
  into.visited += part.visited;
  if (part.max_size > into.max_size) {
    into.max_size = part.max_size;
    into.extremal = part.extremal;
  } else if (part.max_size == into.max_size) {
    into.extremal.insert(into.extremal.end(), part.extremal.begin(),
                         part.extremal.end());
  }
}

}  // namespace oracle_detail

// Exact maximum edge count of an n-vertex r-graph avoiding Berge cycles of
// length >= k (or, in path mode, Berge paths of length k), with the full
// labeled census of the maximum configurations. Enumeration walks free edge
// sets in lexicographic order; a set is extended only when the incremental
// check proves the new edge closes no forbidden structure, which keeps the
// walk inside the (monotone) free family. Work splits by the first two edge
// indices; partial results merge in a fixed order, so the report does not
// depend on the job count.
inline CensusReport max_edges_no_long_cycle(int n, int r, int k,
                                            bool path_mode = false,
                                            const CensusOptions& opts = {}) {
  if (n < 0 || r < 2) throw PreconditionError("census: need n >= 0, r >= 2");
  if (k < 2) throw PreconditionError("census: need k >= 2");
  oracle_detail::CensusSpace space;
  space.n = n;
  space.k = k;
  space.path_mode = path_mode;
  space.node_cap = opts.node_cap;
  oracle_detail::for_each_subset(n, r, [&](const std::vector<Vertex>& pick) {
    space.universe.push_back(pick);
    return false;
  });
  if (space.universe.size() > 40)
    throw PreconditionError("census: edge universe too large for exhaustive enumeration");
  space.universe_masks = oracle_detail::edge_masks(space.universe);
  const int m = static_cast<int>(space.universe.size());
  std::atomic<long long> visited_shared{1 + m};  // empty set and singletons
  space.visited = &visited_shared;
  if (space.node_cap >= 0 && 1 + m > space.node_cap)
    throw BudgetError("census: node cap exceeded");

  // bases: the empty set and the singletons, then one task per index pair
  oracle_detail::CensusAccum total;
  total.visited = 1;
  for (int i = 0; i < m; ++i) {
    std::vector<int> single{i};
    ++total.visited;
    oracle_detail::census_note(total, single);
  }
  struct Task {
    int i, j;
  };
  std::vector<Task> tasks;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) tasks.push_back({i, j});
  std::vector<oracle_detail::CensusAccum> results(tasks.size());
  std::vector<char> active(tasks.size(), 0);
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    while (true) {
      std::size_t t = cursor.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        std::vector<int> set{tasks[t].i};
        if (!oracle_detail::creates_structure(space, set, tasks[t].j)) {
          set.push_back(tasks[t].j);
          active[t] = 1;
          oracle_detail::census_dfs(space, results[t], set, tasks[t].j);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size() ? tasks.size() : 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t t = 0; t < tasks.size(); ++t)
    if (active[t]) oracle_detail::merge_accum(total, results[t]);

  CensusReport report;
  report.params = CensusParams{n, r, k, path_mode};
  report.max_edges = total.max_size;
  report.extremal_count = static_cast<long long>(total.extremal.size());
  report.free_sets_visited = total.visited;
  for (const std::vector<int>& set : total.extremal) {
    std::vector<Hyperedge> edges;
    for (int idx : set) edges.push_back(space.universe[idx]);
    report.extremal.emplace_back(r, n, std::move(edges));
  }
  for (int i = 0; i < opts.witness_cap &&
                  i < static_cast<int>(report.extremal.size());
       ++i)
    report.witnesses.push_back(report.extremal[i]);
  report.has_theorem_bound =
      r >= 3 && (path_mode ? k == r + 1 : (k == r + 1 || k == r + 2));
  if (report.has_theorem_bound) {
    report.bound_from_theorem = bound_value(n, r, k, path_mode);
    const bool equality =
        Rational(report.max_edges) == report.bound_from_theorem;
    const bool under_bound =
        static_cast<long long>(report.max_edges) *
            report.bound_from_theorem.den <=
        report.bound_from_theorem.num;
    report.agreement =
        under_bound &&
        (equality == equality_structure_exists(n, r, k, path_mode));
  }
  std::string blob = "census|" + std::to_string(n) + "|" + std::to_string(r) +
                     "|" + std::to_string(k) + "|" +
                     (path_mode ? "path" : "cycle") + "|" +
                     std::to_string(report.max_edges) + "|" +
                     std::to_string(report.extremal_count) + "|";
  for (const Hypergraph& h : report.extremal) blob += serialize_hypergraph(h);
  report.content_hash = oracle_detail::fnv1a(blob);
  return report;
}

struct TheoremRow {
  int n = 0;
  CensusReport census;
  bool bound_respected = false;
  bool equality_as_characterized = false;
  bool extremal_all_certified = false;
  std::string violation;  // empty if the row is clean
};

struct TheoremReport {
  int theorem = 0;
  int r = 0;
  std::vector<TheoremRow> rows;
  bool ok = false;
};

// Desk-scale verification of one theorem over a range of n: the census
// maximum respects the bound, equality happens exactly where the
// characterized structures exist, and certificate validity coincides with
// e = bound on every census-extremal hypergraph (both directions of the
// "if and only if").
inline TheoremReport verify_theorem(int theorem, int r, int n_min, int n_max,
                                    const CensusOptions& opts = {}) {
  if (theorem != 4 && theorem != 5 && theorem != 6)
    throw PreconditionError("verify_theorem: theorem must be 4, 5, or 6");
  if (r < 3) throw PreconditionError("verify_theorem: requires r >= 3");
  if (n_min > n_max)
    throw PreconditionError("verify_theorem: empty n range");
  const bool path_mode = theorem == 6;
  const int k = (theorem == 4) ? r + 2 : r + 1;
  TheoremReport report;
  report.theorem = theorem;
  report.r = r;
  report.ok = true;
  for (int n = n_min; n <= n_max; ++n) {
    TheoremRow row;
    row.n = n;
    row.census = max_edges_no_long_cycle(n, r, k, path_mode, opts);
    const CensusReport& c = row.census;
    row.bound_respected =
        static_cast<long long>(c.max_edges) * c.bound_from_theorem.den <=
        c.bound_from_theorem.num;
    const bool equality = Rational(c.max_edges) == c.bound_from_theorem;
    row.equality_as_characterized =
        equality == equality_structure_exists(n, r, k, path_mode);
    row.extremal_all_certified = true;
    for (const Hypergraph& h : c.extremal) {
      bool cert_valid = path_mode ? theorem6_component_certify(h).valid
                                  : certify_extremal(h, k).valid;
      bool meets_bound = Rational(h.edge_count()) == c.bound_from_theorem;
      if (cert_valid != meets_bound) {
        row.extremal_all_certified = false;
        row.violation = "certificate validity disagrees with the bound on:\n" +
                        serialize_hypergraph(h);
        break;
      }
    }
    if (!row.bound_respected)
      row.violation = "census maximum exceeds the bound";
    else if (!row.equality_as_characterized)
      row.violation = "equality pattern disagrees with the structure census";
    report.ok = report.ok && row.bound_respected &&
                row.equality_as_characterized && row.extremal_all_certified;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace berge
