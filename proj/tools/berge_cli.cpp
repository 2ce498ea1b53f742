// Command-line front end: gen / check / blocks / inject / dense-set /
// certify / oracle. Exit codes: 0 = success or property true, 1 = property
// false, 2 = usage, input, precondition, or budget errors. With -o the
// artifact goes to the file and a one-line summary to stderr; otherwise the
// artifact goes to stdout. All runs are deterministic; BERGE_JOBS and
// BERGE_NODE_CAP provide environment defaults for --jobs and --node-cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "berge/berge.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

berge::Hypergraph load_hypergraph(const std::string& path) {
  const std::string text = slurp(path);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{')
      return berge::hypergraph_from_json(nlohmann::json::parse(text));
    break;
  }
  return berge::parse_hypergraph(text);
}

void emit(const std::string& artifact, const std::string& out_path,
          const std::string& summary) {
  if (out_path.empty()) {
    std::cout << artifact;
    if (!artifact.empty() && artifact.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << artifact;
    if (!artifact.empty() && artifact.back() != '\n') f << '\n';
    std::cerr << summary << '\n';
  }
}

long long env_number(const char* name, long long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoll(raw);
  } catch (...) {
    throw std::runtime_error(std::string("environment variable ") + name +
                             " is not a number");
  }
}

std::string hypergraph_artifact(const berge::Hypergraph& h,
                                const std::string& format) {
  if (format == "json") return berge::to_json(h).dump(2);
  return berge::serialize_hypergraph(h);
}

struct GenArgs {
  int r = 3;
  int blocks = 1;
  std::string flavor = "full";
  bool star = false;
  bool chain = false;
  std::string plan_path;
  std::string out;
  std::string format = "text";
};

int run_gen(const GenArgs& a) {
  berge::BlockTreePlan plan;
  if (!a.plan_path.empty()) {
    plan = berge::plan_from_json(nlohmann::json::parse(slurp(a.plan_path)));
  } else {
    berge::BlockFlavor flavor = a.flavor == "minus" ? berge::BlockFlavor::kMinus
                                                    : berge::BlockFlavor::kFull;
    plan = a.star ? berge::star_plan(a.r, a.blocks, flavor)
                  : berge::chain_plan(a.r, a.blocks, flavor);
  }
  berge::Hypergraph h = berge::generate_block_tree(plan);
  std::ostringstream summary;
  summary << "generated r=" << h.r() << " n=" << h.n() << " e=" << h.edge_count()
          << " (" << plan.b << " block" << (plan.b == 1 ? "" : "s") << ", "
          << (plan.flavor == berge::BlockFlavor::kFull ? "full" : "minus")
          << ")";
  emit(hypergraph_artifact(h, a.format), a.out, summary.str());
  return kExitTrue;
}

struct CheckArgs {
  std::string input;
  int cycle_at_least = 0;
  bool longest_cycle = false;
  bool longest_path = false;
  long long budget = -1;
  std::string out;
  std::string format = "text";
};

int run_check(const CheckArgs& a) {
  berge::Hypergraph h = load_hypergraph(a.input);
  nlohmann::json j;
  std::ostringstream text;
  int exit_code = kExitTrue;
  std::string summary;

  if (a.cycle_at_least > 0) {
    berge::CycleSearchResult res =
        berge::find_berge_cycle_at_least(h, a.cycle_at_least, a.budget);
    if (res.status == berge::SearchStatus::kBudgetExhausted) {
      std::cerr << "node budget exhausted after " << res.nodes_expanded
                << " expansions; result unknown\n";
      return kExitError;
    }
    j["query"] = "cycle-at-least";
    j["k"] = a.cycle_at_least;
    j["nodes_expanded"] = res.nodes_expanded;
    if (res.status == berge::SearchStatus::kFound) {
      j["found"] = true;
      j["witness"] = berge::to_json(*res.cycle);
      text << "Berge cycle of length " << res.cycle->length() << ": "
           << berge::to_text(*res.cycle) << '\n';
      summary = "cycle found, length " + std::to_string(res.cycle->length());
    } else {
      j["found"] = false;
      text << "no Berge cycle of length >= " << a.cycle_at_least << '\n';
      summary = "no such cycle";
      exit_code = kExitFalse;
    }
  } else if (a.longest_cycle) {
    berge::LongestCycleResult res = berge::longest_berge_cycle(h, a.budget);
    if (res.status == berge::SearchStatus::kBudgetExhausted) {
      std::cerr << "node budget exhausted after " << res.nodes_expanded
                << " expansions; result unknown\n";
      return kExitError;
    }
    j["query"] = "longest-cycle";
    j["nodes_expanded"] = res.nodes_expanded;
    if (res.cycle) {
      j["found"] = true;
      j["length"] = res.cycle->length();
      j["witness"] = berge::to_json(*res.cycle);
      text << "longest Berge cycle has length " << res.cycle->length() << ": "
           << berge::to_text(*res.cycle) << '\n';
      summary = "longest cycle length " + std::to_string(res.cycle->length());
    } else {
      j["found"] = false;
      text << "no Berge cycle exists\n";
      summary = "no cycle";
      exit_code = kExitFalse;
    }
  } else if (a.longest_path) {
    berge::PathSearchResult res = berge::longest_berge_path(h, a.budget);
    if (res.status == berge::SearchStatus::kBudgetExhausted) {
      std::cerr << "node budget exhausted after " << res.nodes_expanded
                << " expansions; result unknown\n";
      return kExitError;
    }
    j["query"] = "longest-path";
    j["nodes_expanded"] = res.nodes_expanded;
    if (res.path && !res.degenerate_single_vertex) {
      j["found"] = true;
      j["length"] = res.path->length();
      j["witness"] = berge::to_json(*res.path);
      text << "longest Berge path has length " << res.path->length() << ": "
           << berge::to_text(*res.path) << '\n';
      summary = "longest path length " + std::to_string(res.path->length());
    } else {
      j["found"] = false;
      if (res.path) {
        j["degenerate"] = true;
        text << "only the degenerate single-vertex path exists\n";
        summary = "degenerate path only";
      } else {
        text << "no Berge path exists (no vertices)\n";
        summary = "no path";
      }
      exit_code = kExitFalse;
    }
  } else {
    throw CLI::ValidationError(
        "check", "pick one of --cycle-at-least, --longest-cycle, --longest-path");
  }
  emit(a.format == "json" ? j.dump(2) : text.str(), a.out, summary);
  return exit_code;
}

struct InputArgs {
  std::string input;
  std::string out;
  std::string format = "text";
};

int run_blocks(const InputArgs& a) {
  berge::Hypergraph h = load_hypergraph(a.input);
  berge::ShadowGraph shadow = berge::two_shadow(h);
  berge::BlockDecomposition dec = berge::block_decomposition(shadow);
  const bool connected = berge::is_connected(h);
  std::vector<berge::Hyperedge> cuts;
  if (connected) cuts = berge::cut_hyperedges(h);

  nlohmann::json j = berge::to_json(dec);
  j["connected"] = connected;
  std::ostringstream text;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    text << "block " << i + 1 << ":";
    for (berge::Vertex v : dec.blocks[i]) text << ' ' << v;
    text << '\n';
  }
  text << "cut vertices:";
  for (berge::Vertex v : dec.cut_vertices) text << ' ' << v;
  if (dec.cut_vertices.empty()) text << " (none)";
  text << '\n';
  if (connected) {
    j["cut_hyperedges"] = cuts;
    text << "cut hyperedges:";
    if (cuts.empty()) text << " (none)";
    text << '\n';
    for (const berge::Hyperedge& e : cuts) {
      text << " ";
      for (berge::Vertex v : e) text << ' ' << v;
      text << '\n';
    }
  } else {
    text << "shadow is not connected; cut hyperedges not defined\n";
  }
  emit(a.format == "json" ? j.dump(2) : text.str(), a.out,
       "blocks: " + std::to_string(dec.blocks.size()) +
           ", cut vertices: " + std::to_string(dec.cut_vertices.size()));
  return kExitTrue;
}

struct InjectArgs : InputArgs {
  bool allow_miss = false;
};

int run_inject(const InjectArgs& a) {
  berge::Hypergraph h = load_hypergraph(a.input);
  auto res = berge::hall_injection(h, a.allow_miss ? 1 : 0);
  std::ostringstream text;
  nlohmann::json j;
  int exit_code = kExitTrue;
  std::string summary;
  if (std::holds_alternative<berge::Injection>(res)) {
    const berge::Injection& inj = std::get<berge::Injection>(res);
    j = berge::to_json(inj);
    for (const auto& [v, e] : inj.assignment) {
      text << v << " ->";
      for (berge::Vertex w : e) text << ' ' << w;
      text << '\n';
    }
    if (!inj.missed.empty()) {
      text << "missed:";
      for (berge::Vertex v : inj.missed) text << ' ' << v;
      text << '\n';
    }
    summary = "injection found, " + std::to_string(inj.missed.size()) + " missed";
  } else {
    const berge::DeficientSet& ds = std::get<berge::DeficientSet>(res);
    j = berge::to_json(ds);
    text << "deficient set:";
    for (berge::Vertex v : ds.vertices) text << ' ' << v;
    text << '\n'
         << "vertices " << ds.vertices.size() << ", incident hyperedges "
         << ds.incident_edges << '\n';
    summary = "no injection; deficient set of " +
              std::to_string(ds.vertices.size()) + " vertices";
    exit_code = kExitFalse;
  }
  emit(a.format == "json" ? j.dump(2) : text.str(), a.out, summary);
  return exit_code;
}

struct DenseArgs : InputArgs {
  int k = 0;
};

int run_dense_set(const DenseArgs& a) {
  berge::Hypergraph h = load_hypergraph(a.input);
  berge::DenseSetSearchResult res = berge::find_dense_terminal_set(h, a.k);
  nlohmann::json j = berge::to_json(res);
  std::ostringstream text;
  std::string summary;
  if (std::holds_alternative<berge::BergeCycle>(res.outcome)) {
    const berge::BergeCycle& c = std::get<berge::BergeCycle>(res.outcome);
    text << "Berge cycle of length " << c.length() << ": " << berge::to_text(c)
         << '\n';
    summary = "cycle of length " + std::to_string(c.length());
  } else {
    const berge::DenseTerminalSet& dts =
        std::get<berge::DenseTerminalSet>(res.outcome);
    text << "dense terminal set:";
    for (berge::Vertex v : dts.vertices) text << ' ' << v;
    text << '\n' << "inside hyperedges (" << dts.inside_edges.size() << "):\n";
    for (const berge::Hyperedge& e : dts.inside_edges) {
      text << " ";
      for (berge::Vertex v : e) text << ' ' << v;
      text << '\n';
    }
    text << "anchor path: " << berge::to_text(dts.anchor_path) << '\n';
    summary = "dense terminal set with " +
              std::to_string(dts.inside_edges.size()) + " inside edges";
  }
  text << "improvement steps: " << res.improvement_steps
       << ", fallback: " << (res.used_fallback ? "yes" : "no") << '\n';
  emit(a.format == "json" ? j.dump(2) : text.str(), a.out, summary);
  return kExitTrue;
}

struct CertifyArgs : InputArgs {
  int k = 0;
  bool path_variant = false;
};

int run_certify(const CertifyArgs& a) {
  berge::Hypergraph h = load_hypergraph(a.input);
  std::ostringstream text;
  nlohmann::json j;
  bool valid = false;
  if (a.path_variant) {
    berge::PathExtremalReport rep = berge::theorem6_component_certify(h);
    valid = rep.valid;
    j = berge::to_json(rep);
    text << "components: " << rep.components.size() << '\n';
    for (const berge::ComponentVerdict& cv : rep.components) {
      text << " ";
      for (berge::Vertex v : cv.component) text << ' ' << v;
      text << (cv.ok ? "  ok" : "  FAIL") << " (inside edges "
           << cv.inside_edges << ")\n";
    }
    text << (valid ? "valid: every component is complete with all inside edges\n"
                   : "invalid\n");
  } else {
    if (a.k == 0)
      throw CLI::ValidationError("certify", "--k is required without --path");
    berge::ExtremalCertificate cert = berge::certify_extremal(h, a.k);
    valid = cert.valid;
    j = berge::to_json(cert);
    text << "n=" << cert.n << " e=" << cert.e << " bound=" << cert.bound.str()
         << " connected=" << (cert.connected ? "yes" : "no") << '\n';
    for (const berge::BlockVerdict& bv : cert.block_verdicts) {
      text << "block";
      for (berge::Vertex v : bv.block) text << ' ' << v;
      text << (bv.ok ? "  ok" : "  FAIL") << " (inside edges "
           << bv.inside_edges << ")\n";
    }
    text << (valid ? "certificate valid\n" : "invalid: " + cert.failure + "\n");
  }
  emit(a.format == "json" ? j.dump(2) : text.str(), a.out,
       valid ? "certificate valid" : "certificate invalid");
  return valid ? kExitTrue : kExitFalse;
}

struct CensusArgs {
  int n = 0;
  int r = 0;
  int k = 0;
  std::string mode = "cycle";
  int jobs = 0;
  int witnesses = 4;
  long long node_cap = 0;
  std::string out;
};

int run_census(const CensusArgs& a) {
  berge::CensusOptions opts;
  opts.jobs = a.jobs > 0 ? a.jobs : static_cast<int>(env_number("BERGE_JOBS", 1));
  opts.node_cap =
      a.node_cap != 0 ? a.node_cap : env_number("BERGE_NODE_CAP", -1);
  opts.witness_cap = a.witnesses;
  berge::CensusReport rep =
      berge::max_edges_no_long_cycle(a.n, a.r, a.k, a.mode == "path", opts);
  std::ostringstream summary;
  summary << "max_edges=" << rep.max_edges << " bound="
          << (rep.has_theorem_bound ? rep.bound_from_theorem.str() : "n/a")
          << " extremal_count=" << rep.extremal_count << " agreement="
          << (rep.agreement ? "yes" : "no");
  emit(berge::to_json(rep).dump(2), a.out, summary.str());
  return rep.agreement ? kExitTrue : kExitFalse;
}

struct VerifyArgs {
  int theorem = 0;
  int r = 0;
  int n_min = 0;
  int n_max = 0;
  int jobs = 0;
  long long node_cap = 0;
  std::string out;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
  berge::CensusOptions opts;
  opts.jobs = a.jobs > 0 ? a.jobs : static_cast<int>(env_number("BERGE_JOBS", 1));
  opts.node_cap =
      a.node_cap != 0 ? a.node_cap : env_number("BERGE_NODE_CAP", -1);
  berge::TheoremReport rep =
      berge::verify_theorem(a.theorem, a.r, a.n_min, a.n_max, opts);
  std::ostringstream text;
  for (const berge::TheoremRow& row : rep.rows) {
    text << "n=" << row.n << ": max_edges=" << row.census.max_edges
         << " bound=" << row.census.bound_from_theorem.str()
         << " extremal_count=" << row.census.extremal_count
         << " bound_respected=" << (row.bound_respected ? "yes" : "no")
         << " equality_as_characterized="
         << (row.equality_as_characterized ? "yes" : "no")
         << " extremal_all_certified="
         << (row.extremal_all_certified ? "yes" : "no") << '\n';
    if (!row.violation.empty()) text << "VIOLATION: " << row.violation << '\n';
  }
  text << (rep.ok ? "theorem verified on the range\n"
                  : "verification FAILED\n");
  emit(a.format == "json" ? berge::to_json(rep).dump(2) : text.str(), a.out,
       rep.ok ? "verified" : "FAILED");
  return rep.ok ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"r-uniform hypergraph toolkit: Berge cycles, injections, "
               "extremal block trees, exhaustive oracle"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a block-tree hypergraph");
  gen_cmd->add_option("--r", gen.r, "uniformity");
  gen_cmd->add_option("--blocks", gen.blocks, "number of blocks");
  gen_cmd->add_option("--flavor", gen.flavor, "full | minus")
      ->check(CLI::IsMember({"full", "minus"}));
  CLI::Option* chain_flag = gen_cmd->add_flag("--chain", gen.chain, "chain attachment (default)");
  gen_cmd->add_flag("--star", gen.star, "star attachment")->excludes(chain_flag);
  gen_cmd->add_option("--plan", gen.plan_path, "plan file (json)");
  gen_cmd->add_option("-o,--output", gen.out, "write artifact to file");
  gen_cmd->add_option("--format", gen.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "search for Berge cycles and paths");
  check_cmd->add_option("--input", check.input, "hypergraph file")->required();
  CLI::Option* cal = check_cmd->add_option("--cycle-at-least", check.cycle_at_least,
                                           "find a Berge cycle of length >= K");
  CLI::Option* lc = check_cmd->add_flag("--longest-cycle", check.longest_cycle,
                                        "find the longest Berge cycle");
  CLI::Option* lp = check_cmd->add_flag("--longest-path", check.longest_path,
                                        "find the longest Berge path");
  cal->excludes(lc)->excludes(lp);
  lc->excludes(lp);
  check_cmd->add_option("--budget", check.budget, "node expansion budget");
  check_cmd->add_option("-o,--output", check.out, "write artifact to file");
  check_cmd->add_option("--format", check.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  InputArgs blocks;
  CLI::App* blocks_cmd = app.add_subcommand("blocks", "block decomposition of the 2-shadow");
  blocks_cmd->add_option("--input", blocks.input, "hypergraph file")->required();
  blocks_cmd->add_option("-o,--output", blocks.out, "write artifact to file");
  blocks_cmd->add_option("--format", blocks.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  InjectArgs inject;
  CLI::App* inject_cmd = app.add_subcommand("inject", "vertex-to-incident-edge injection");
  inject_cmd->add_option("--input", inject.input, "hypergraph file")->required();
  inject_cmd->add_flag("--allow-miss", inject.allow_miss, "permit one missed vertex");
  inject_cmd->add_option("-o,--output", inject.out, "write artifact to file");
  inject_cmd->add_option("--format", inject.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  DenseArgs dense;
  CLI::App* dense_cmd = app.add_subcommand(
      "dense-set", "long Berge cycle or dense (r+1)-set via path rotations");
  dense_cmd->add_option("--input", dense.input, "hypergraph file")->required();
  dense_cmd->add_option("--k", dense.k, "cycle length target (r+1 or r+2)")->required();
  dense_cmd->add_option("-o,--output", dense.out, "write artifact to file");
  dense_cmd->add_option("--format", dense.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CertifyArgs certify;
  CLI::App* certify_cmd = app.add_subcommand("certify", "equality-structure certification");
  certify_cmd->add_option("--input", certify.input, "hypergraph file")->required();
  certify_cmd->add_option("--k", certify.k, "cycle bound (r+1 or r+2)");
  certify_cmd->add_flag("--path", certify.path_variant,
                        "certify the path-bound structure instead");
  certify_cmd->add_option("-o,--output", certify.out, "write artifact to file");
  certify_cmd->add_option("--format", certify.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exhaustive enumeration tools");
  oracle_cmd->require_subcommand(1);

  CensusArgs census;
  CLI::App* census_cmd = oracle_cmd->add_subcommand(
      "census", "exact extremal numbers by exhaustive enumeration");
  census_cmd->add_option("--n", census.n, "vertex count")->required();
  census_cmd->add_option("--r", census.r, "uniformity")->required();
  census_cmd->add_option("--k", census.k, "forbidden length")->required();
  census_cmd->add_option("--mode", census.mode, "cycle | path")
      ->check(CLI::IsMember({"cycle", "path"}));
  census_cmd->add_option("--jobs", census.jobs, "worker threads");
  census_cmd->add_option("--witnesses", census.witnesses, "witnesses in the report");
  census_cmd->add_option("--node-cap", census.node_cap, "visited-set budget");
  census_cmd->add_option("-o,--output", census.out, "write report to file");

  VerifyArgs verify;
  CLI::App* verify_cmd = oracle_cmd->add_subcommand(
      "verify", "check a theorem's bound and equality structure on a range");
  verify_cmd->add_option("--theorem", verify.theorem, "4 | 5 | 6")
      ->required()
      ->check(CLI::IsMember({4, 5, 6}));
  verify_cmd->add_option("--r", verify.r, "uniformity")->required();
  verify_cmd->add_option("--n-min", verify.n_min, "first n")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "last n")->required();
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads");
  verify_cmd->add_option("--node-cap", verify.node_cap, "visited-set budget");
  verify_cmd->add_option("-o,--output", verify.out, "write report to file");
  verify_cmd->add_option("--format", verify.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) return run_check(check);
    if (*blocks_cmd) return run_blocks(blocks);
    if (*inject_cmd) return run_inject(inject);
    if (*dense_cmd) return run_dense_set(dense);
    if (*certify_cmd) return run_certify(certify);
    if (*census_cmd) return run_census(census);
    if (*verify_cmd) return run_verify(verify);
    std::cerr << "no subcommand selected\n";
    return kExitError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  } catch (const berge::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitError;
  } catch (const berge::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitError;
  } catch (const berge::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
