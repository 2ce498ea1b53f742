#pragma once

// Berge paths inside a small saturated vertex set. With r hyperedges packed
// into r+1 vertices, any two prescribed endpoints are joined by a Berge path
// spanning the set; with r-1 hyperedges (r >= 4) the same works one vertex
// shorter. Construction: lay out a shadow path, then match consecutive
// pairs to distinct inside edges.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

enum class SaturationMode { kFull, kNear };  // r resp. r-1 inside edges

class SaturatedSet {
 public:
  SaturatedSet(int r, std::vector<Vertex> s, std::vector<Hyperedge> inside)
      : r_(r), s_(std::move(s)), inside_(std::move(inside)) {
    if (r_ < 3) throw PreconditionError("SaturatedSet: requires r >= 3");
    s_ = detail::sorted_unique(s_);
    if (static_cast<int>(s_.size()) != r_ + 1)
      throw PreconditionError("SaturatedSet: set must have r+1 vertices");
    for (Hyperedge& e : inside_) {
      e = detail::sorted_unique(e);
      if (static_cast<int>(e.size()) != r_)
        throw PreconditionError("SaturatedSet: inside edge has wrong size");
      if (!std::includes(s_.begin(), s_.end(), e.begin(), e.end()))
        throw PreconditionError("SaturatedSet: edge not inside the set");
    }
    std::sort(inside_.begin(), inside_.end());
    if (std::adjacent_find(inside_.begin(), inside_.end()) != inside_.end())
      throw PreconditionError("SaturatedSet: duplicate inside edge");
    if (static_cast<int>(inside_.size()) == r_) {
      mode_ = SaturationMode::kFull;
    } else if (static_cast<int>(inside_.size()) == r_ - 1) {
      if (r_ < 4) throw PreconditionError("SaturatedSet: NEAR requires r >= 4");
      mode_ = SaturationMode::kNear;
    } else {
      throw PreconditionError("SaturatedSet: need r or r-1 inside edges");
    }
  }

  int r() const { return r_; }
  SaturationMode mode() const { return mode_; }
  const std::vector<Vertex>& vertices() const { return s_; }
  const std::vector<Hyperedge>& inside_edges() const { return inside_; }

 private:
  int r_;
  std::vector<Vertex> s_;
  std::vector<Hyperedge> inside_;
  SaturationMode mode_ = SaturationMode::kFull;
};

// Every pair of set vertices lies in some inside edge. Holds for every
// legal SaturatedSet; exposed so tests can assert it wholesale.
inline bool saturated_shadow_is_complete(const SaturatedSet& ss) {
  const auto& s = ss.vertices();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool covered = false;
      for (const Hyperedge& e : ss.inside_edges())
        if (std::binary_search(e.begin(), e.end(), s[i]) &&
            std::binary_search(e.begin(), e.end(), s[j])) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

// Berge path from u to v of length r (FULL) or r-1 (NEAR) using each inside
// edge at most once. The shadow path is the lexicographically smallest
// admissible sequence: u, the smallest unused set vertices ascending, v.
// The pair-to-edge matching then always exists; its failure would mean the
// set invariants were broken, so it surfaces as a logic error.
inline BergePath saturated_path(const SaturatedSet& ss, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("saturated_path: endpoints must differ");
  const auto& s = ss.vertices();
  if (!std::binary_search(s.begin(), s.end(), u) ||
      !std::binary_search(s.begin(), s.end(), v))
    throw PreconditionError("saturated_path: endpoint not in the set");
  const std::size_t want =
      ss.mode() == SaturationMode::kFull ? s.size() : s.size() - 1;
  std::vector<Vertex> seq{u};
  for (Vertex w : s) {
    if (seq.size() + 1 == want) break;
    if (w != u && w != v) seq.push_back(w);
  }
  seq.push_back(v);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    pairs.emplace_back(seq[i], seq[i + 1]);
  std::optional<PairAssignment> assigned = sdr_assign(pairs, ss.inside_edges());
  if (!assigned)
    throw std::logic_error("saturated_path: pair matching failed on a legal set");
  BergePath p;
  p.vertices = std::move(seq);
  p.edges = std::move(assigned->edges);
  return p;
}

}  // namespace berge
