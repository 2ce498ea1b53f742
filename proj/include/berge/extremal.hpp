#pragma once

// Extremal families for the cycle and path bounds: trees of K_{r+1} blocks
// glued at cut vertices, either with all r+1 inside hyperedges (kFull, for
// the k = r+2 bound) or with r of them (kMinus, for k = r+1). The
// certifiers check the matching equality characterizations on arbitrary
// input and tie them back to the exact rational bound values.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/blocks.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Largest edge count with no Berge cycle of length >= k (k = r+1: n-1;
// k = r+2: (r+1)(n-1)/r), or with no Berge path of length k = r+1 (value n).
inline Rational bound_value(int n, int r, int k, bool path_variant = false) {
  if (n < 0 || r < 3) throw PreconditionError("bound_value: need n >= 0, r >= 3");
  if (path_variant) {
    if (k != r + 1)
      throw PreconditionError("bound_value: path bound needs k = r+1");
    return Rational(n);
  }
  if (k == r + 1) return Rational(n - 1);
  if (k == r + 2) return Rational(static_cast<long long>(r + 1) * (n - 1), r);
  throw PreconditionError("bound_value: k must be r+1 or r+2");
}

enum class BlockFlavor { kFull, kMinus };

struct BlockAttachment {
  int target_block = 0;  // earlier block this one shares a vertex with
  int cut_index = 0;     // which of the target's r+1 vertices is shared
};

struct BlockTreePlan {
  int r = 3;
  int b = 1;
  BlockFlavor flavor = BlockFlavor::kFull;
  std::vector<BlockAttachment> attachments;  // one per block after the first
  // kMinus only: per block, the vertex index whose avoiding r-subset is
  // dropped. Empty means 0 everywhere (drop the subset missing the
  // block's smallest vertex).
  std::vector<int> omit_index;
};

inline BlockTreePlan chain_plan(int r, int b, BlockFlavor flavor) {
  BlockTreePlan plan{r, b, flavor, {}, {}};
  for (int t = 1; t < b; ++t) plan.attachments.push_back({t - 1, r});
  return plan;
}

inline BlockTreePlan star_plan(int r, int b, BlockFlavor flavor) {
  BlockTreePlan plan{r, b, flavor, {}, {}};
  for (int t = 1; t < b; ++t) plan.attachments.push_back({0, 0});
  return plan;
}

inline Hypergraph generate_block_tree(const BlockTreePlan& plan) {
  const int r = plan.r;
  if (r < 3) throw PreconditionError("generate_block_tree: requires r >= 3");
  if (plan.b < 1) throw PreconditionError("generate_block_tree: need b >= 1");
  if (static_cast<int>(plan.attachments.size()) != plan.b - 1)
    throw PreconditionError("generate_block_tree: need one attachment per added block");
  if (!plan.omit_index.empty() &&
      static_cast<int>(plan.omit_index.size()) != plan.b)
    throw PreconditionError("generate_block_tree: omit_index must cover every block");
  for (int v : plan.omit_index)
    if (v < 0 || v > r)
      throw PreconditionError("generate_block_tree: omit_index out of range");

  std::vector<std::vector<Vertex>> blocks;
  blocks.push_back({});
  for (Vertex v = 1; v <= r + 1; ++v) blocks[0].push_back(v);
  Vertex next = r + 2;
  for (int t = 1; t < plan.b; ++t) {
    const BlockAttachment& att = plan.attachments[t - 1];
    if (att.target_block < 0 || att.target_block >= t)
      throw PreconditionError("generate_block_tree: attachment target must be an earlier block");
    if (att.cut_index < 0 || att.cut_index > r)
      throw PreconditionError("generate_block_tree: cut_index out of range");
    std::vector<Vertex> blk{blocks[att.target_block][att.cut_index]};
    for (int i = 0; i < r; ++i) blk.push_back(next++);
    std::sort(blk.begin(), blk.end());
    blocks.push_back(std::move(blk));
  }

  std::vector<Hyperedge> edges;
  for (int t = 0; t < plan.b; ++t) {
    const std::vector<Vertex>& blk = blocks[t];
    int omit = plan.omit_index.empty() ? 0 : plan.omit_index[t];
    for (int skip = 0; skip <= r; ++skip) {
      if (plan.flavor == BlockFlavor::kMinus && skip == omit) continue;
      Hyperedge e;
      for (int i = 0; i <= r; ++i)
        if (i != skip) e.push_back(blk[i]);
      edges.push_back(std::move(e));
    }
  }
  return Hypergraph(r, plan.b * r + 1, std::move(edges));
}

struct BlockVerdict {
  std::vector<Vertex> block;
  bool complete = false;  // the block induces K_{r+1} in the shadow
  int inside_edges = 0;   // host hyperedges contained in the block
  bool ok = false;
};

struct ExtremalCertificate {
  int k = 0;
  bool connected = false;
  bool valid = false;
  std::string failure;  // empty when valid
  std::vector<BlockVerdict> block_verdicts;
  BlockDecomposition blocks;
  int n = 0;
  int e = 0;
  Rational bound;
};

namespace detail {

inline std::string join_vertices(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(v);
  }
  return out;
}

inline int edges_inside(const Hypergraph& h, const std::vector<Vertex>& set) {
  int count = 0;
  for (const Hyperedge& e : h.edges())
    if (std::includes(set.begin(), set.end(), e.begin(), e.end())) ++count;
  return count;
}

inline bool induces_complete(const ShadowGraph& shadow,
                             const std::vector<Vertex>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!shadow.has_pair(set[i], set[j])) return false;
  return true;
}

}  // namespace detail

// Equality characterization for the cycle bounds: the shadow must be
// connected and every block must be K_{r+1} carrying exactly r+1 (k = r+2)
// or exactly r (k = r+1) hyperedges. A valid certificate forces
// e(H) = bound_value(n, r, k) exactly; the arithmetic is re-checked and a
// mismatch is a hard error, not a failed certificate.
inline ExtremalCertificate certify_extremal(const Hypergraph& h, int k) {
  const int r = h.r();
  if (k != r + 1 && k != r + 2)
    throw PreconditionError("certify_extremal: k must be r+1 or r+2");
  ExtremalCertificate cert;
  cert.k = k;
  cert.n = h.n();
  cert.e = h.edge_count();
  cert.bound = bound_value(h.n(), r, k);

  ShadowGraph shadow = two_shadow(h);
  cert.connected = is_connected(h);
  const int need = (k == r + 2) ? r + 1 : r;
  BlockDecomposition dec = block_decomposition(shadow);
  for (const std::vector<Vertex>& blk : dec.blocks) {
    BlockVerdict bv;
    bv.block = blk;
    bv.complete = static_cast<int>(blk.size()) == r + 1 &&
                  detail::induces_complete(shadow, blk);
    bv.inside_edges = detail::edges_inside(h, blk);
    bv.ok = bv.complete && bv.inside_edges == need;
    cert.block_verdicts.push_back(std::move(bv));
  }

  if (!cert.connected) {
    cert.failure = "shadow is not connected";
  } else {
    for (const BlockVerdict& bv : cert.block_verdicts) {
      if (bv.ok) continue;
      if (!bv.complete)
        cert.failure = "block (" + detail::join_vertices(bv.block) +
                       ") is not a complete graph on r+1 vertices";
      else
        cert.failure = "block (" + detail::join_vertices(bv.block) + ") has " +
                       std::to_string(bv.inside_edges) +
                       " inside hyperedges, needs " + std::to_string(need);
      break;
    }
  }
  cert.valid = cert.failure.empty();
  if (cert.valid && Rational(cert.e) != cert.bound)
    throw std::logic_error("certify_extremal: valid structure but edge count differs from the bound");
  cert.blocks = std::move(dec);
  return cert;
}

struct ComponentVerdict {
  std::vector<Vertex> component;
  bool complete = false;
  int inside_edges = 0;
  bool ok = false;
};

struct PathExtremalReport {
  bool valid = false;
  std::vector<ComponentVerdict> components;
  int n = 0;
  int e = 0;
};

// Equality characterization for the path bound: every shadow component
// (isolated vertices included) must be K_{r+1} carrying all r+1 inside
// hyperedges. Validity forces e(H) = n.
inline PathExtremalReport theorem6_component_certify(const Hypergraph& h) {
  const int r = h.r();
  PathExtremalReport report;
  report.n = h.n();
  report.e = h.edge_count();
  ShadowGraph shadow = two_shadow(h);

  std::vector<char> seen(h.n() + 1, 0);
  for (Vertex s = 1; s <= h.n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : shadow.adj[comp[head]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    ComponentVerdict cv;
    cv.complete = static_cast<int>(comp.size()) == r + 1 &&
                  detail::induces_complete(shadow, comp);
    cv.inside_edges = detail::edges_inside(h, comp);
    cv.ok = cv.complete && cv.inside_edges == r + 1;
    cv.component = std::move(comp);
    report.components.push_back(std::move(cv));
  }
  report.valid = true;
  for (const ComponentVerdict& cv : report.components)
    report.valid = report.valid && cv.ok;
  if (report.valid && report.e != report.n)
    throw std::logic_error("theorem6_component_certify: valid structure but e != n");
  return report;
}

}  // namespace berge
