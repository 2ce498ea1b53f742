#pragma once

// Structured-object encodings. A hypergraph is {"r", "n", "edges"} with
// vertices ascending and edges lexicographic, same canonical order as the
// text format. The other encoders feed the CLI's --format json output.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "berge/blocks.hpp"
#include "berge/extremal.hpp"
#include "berge/hypergraph.hpp"
#include "berge/injections.hpp"
#include "berge/oracle.hpp"
#include "berge/search.hpp"

namespace berge {

inline nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["r"] = h.r();
  j["n"] = h.n();
  j["edges"] = h.edges();
  return j;
}

inline Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("n") ||
      !j.contains("edges"))
    throw ParseError("hypergraph object needs fields r, n, edges");
  if (!j["r"].is_number_integer() || !j["n"].is_number_integer() ||
      !j["edges"].is_array())
    throw ParseError("hypergraph object has wrongly typed fields");
  std::vector<Hyperedge> edges;
  for (const nlohmann::json& row : j["edges"]) {
    if (!row.is_array()) throw ParseError("hyperedge must be an integer list");
    Hyperedge e;
    for (const nlohmann::json& v : row) {
      if (!v.is_number_integer())
        throw ParseError("hyperedge must be an integer list");
      e.push_back(v.get<int>());
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(j["r"].get<int>(), j["n"].get<int>(), std::move(edges));
}

inline nlohmann::json to_json(const BergePath& p) {
  return nlohmann::json{{"kind", "path"},
                        {"length", p.length()},
                        {"vertices", p.vertices},
                        {"edges", p.edges}};
}

inline nlohmann::json to_json(const BergeCycle& c) {
  return nlohmann::json{{"kind", "cycle"},
                        {"length", c.length()},
                        {"vertices", c.vertices},
                        {"edges", c.edges}};
}

inline nlohmann::json to_json(const BlockDecomposition& d) {
  nlohmann::json j;
  j["blocks"] = d.blocks;
  j["cut_vertices"] = d.cut_vertices;
  nlohmann::json at = nlohmann::json::object();
  for (const auto& [v, ids] : d.blocks_at_cut) at[std::to_string(v)] = ids;
  j["blocks_at_cut"] = std::move(at);
  return j;
}

inline nlohmann::json to_json(const Injection& inj) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [v, e] : inj.assignment)
    pairs.push_back(nlohmann::json{{"vertex", v}, {"edge", e}});
  return nlohmann::json{{"kind", "injection"},
                        {"assignment", std::move(pairs)},
                        {"missed", inj.missed}};
}

inline nlohmann::json to_json(const DeficientSet& ds) {
  return nlohmann::json{{"kind", "deficient_set"},
                        {"vertices", ds.vertices},
                        {"incident_edges", ds.incident_edges}};
}

inline nlohmann::json to_json(const DeficiencyReduction& red) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const DeficiencyRemoval& rm : red.log)
    rounds.push_back(nlohmann::json{{"removed_vertices", rm.removed_vertices},
                                    {"removed_edges", rm.removed_edges}});
  return nlohmann::json{{"kept_vertices", red.kept_vertices},
                        {"rounds", std::move(rounds)},
                        {"reduced", to_json(red.reduced)}};
}

inline nlohmann::json to_json(const DenseSetSearchResult& res) {
  nlohmann::json j;
  j["used_fallback"] = res.used_fallback;
  j["improvement_steps"] = res.improvement_steps;
  if (std::holds_alternative<BergeCycle>(res.outcome)) {
    j["outcome"] = to_json(std::get<BergeCycle>(res.outcome));
  } else {
    const DenseTerminalSet& dts = std::get<DenseTerminalSet>(res.outcome);
    j["outcome"] = nlohmann::json{{"kind", "dense_terminal_set"},
                                  {"vertices", dts.vertices},
                                  {"inside_edges", dts.inside_edges},
                                  {"anchor_path", to_json(dts.anchor_path)}};
  }
  return j;
}

inline nlohmann::json to_json(const ExtremalCertificate& cert) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const BlockVerdict& bv : cert.block_verdicts)
    blocks.push_back(nlohmann::json{{"block", bv.block},
                                    {"complete", bv.complete},
                                    {"inside_edges", bv.inside_edges},
                                    {"ok", bv.ok}});
  return nlohmann::json{{"k", cert.k},
                        {"valid", cert.valid},
                        {"connected", cert.connected},
                        {"failure", cert.failure},
                        {"n", cert.n},
                        {"e", cert.e},
                        {"bound", cert.bound.str()},
                        {"blocks", std::move(blocks)}};
}

inline nlohmann::json to_json(const PathExtremalReport& rep) {
  nlohmann::json comps = nlohmann::json::array();
  for (const ComponentVerdict& cv : rep.components)
    comps.push_back(nlohmann::json{{"component", cv.component},
                                   {"complete", cv.complete},
                                   {"inside_edges", cv.inside_edges},
                                   {"ok", cv.ok}});
  return nlohmann::json{{"valid", rep.valid},
                        {"n", rep.n},
                        {"e", rep.e},
                        {"components", std::move(comps)}};
}

inline nlohmann::json to_json(const CensusReport& rep) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Hypergraph& h : rep.witnesses) witnesses.push_back(to_json(h));
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(rep.content_hash));
  return nlohmann::json{
      {"params", nlohmann::json{{"n", rep.params.n},
                                {"r", rep.params.r},
                                {"k", rep.params.k},
                                {"mode", rep.params.path_mode ? "path" : "cycle"}}},
      {"max_edges", rep.max_edges},
      {"extremal_count", rep.extremal_count},
      {"free_sets_visited", rep.free_sets_visited},
      {"witnesses", std::move(witnesses)},
      {"bound", rep.has_theorem_bound
                    ? nlohmann::json(rep.bound_from_theorem.str())
                    : nlohmann::json(nullptr)},
      {"agreement", rep.agreement},
      {"content_hash", std::string(hash)}};
}

inline nlohmann::json to_json(const TheoremReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TheoremRow& row : rep.rows)
    rows.push_back(nlohmann::json{
        {"n", row.n},
        {"max_edges", row.census.max_edges},
        {"bound", row.census.bound_from_theorem.str()},
        {"extremal_count", row.census.extremal_count},
        {"bound_respected", row.bound_respected},
        {"equality_as_characterized", row.equality_as_characterized},
        {"extremal_all_certified", row.extremal_all_certified},
        {"violation", row.violation}});
  return nlohmann::json{{"theorem", rep.theorem},
                        {"r", rep.r},
                        {"ok", rep.ok},
                        {"rows", std::move(rows)}};
}

inline nlohmann::json to_json(const BlockTreePlan& plan) {
  nlohmann::json atts = nlohmann::json::array();
  for (const BlockAttachment& a : plan.attachments)
    atts.push_back(nlohmann::json{{"target_block", a.target_block},
                                  {"cut_index", a.cut_index}});
  return nlohmann::json{
      {"r", plan.r},
      {"b", plan.b},
      {"flavor", plan.flavor == BlockFlavor::kFull ? "full" : "minus"},
      {"attachments", std::move(atts)},
      {"omit_index", plan.omit_index}};
}

inline BlockTreePlan plan_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("b") ||
      !j.contains("flavor"))
    throw ParseError("plan object needs fields r, b, flavor");
  BlockTreePlan plan;
  plan.r = j["r"].get<int>();
  plan.b = j["b"].get<int>();
  const std::string flavor = j["flavor"].get<std::string>();
  if (flavor == "full")
    plan.flavor = BlockFlavor::kFull;
  else if (flavor == "minus")
    plan.flavor = BlockFlavor::kMinus;
  else
    throw ParseError("plan flavor must be \"full\" or \"minus\"");
  if (j.contains("attachments"))
    for (const nlohmann::json& a : j["attachments"])
      plan.attachments.push_back(
          {a.at("target_block").get<int>(), a.at("cut_index").get<int>()});
  if (j.contains("omit_index"))
    plan.omit_index = j["omit_index"].get<std::vector<int>>();
  return plan;
}

}  // namespace berge
