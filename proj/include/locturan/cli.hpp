#pragma once

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "locturan/bounds.hpp"
#include "locturan/generators.hpp"
#include "locturan/io.hpp"
#include "locturan/oracle.hpp"
#include "locturan/transforms.hpp"

namespace locturan::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInconsistent = 1;
inline constexpr int kInputError = 2;

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::size_t base) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(start, end - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("expected a comma-separated integer list", base + start);
    out.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

// "5,4,4,3" (a chain) or "5,4,4,3:0,0,1" (parent index of blocks 1..).
inline BlockSpec parse_block_spec(const std::string& text) {
  BlockSpec spec;
  const std::size_t colon = text.find(':');
  spec.orders = parse_int_list(std::string_view(text).substr(0, colon), 0);
  if (colon != std::string::npos) spec.parents = parse_int_list(std::string_view(text).substr(colon + 1), colon + 1);
  return spec;
}

struct ForestSpec {
  int count = 0;
  int min_order = 0;
  int max_order = 0;
};

// "2x4": two K4; "3x2-5": three cliques of order uniform in [2,5].
inline ForestSpec parse_forest_spec(const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos) throw ParseError("clique forest spec must look like COUNTxORDER or COUNTxMIN-MAX", 0);
  ForestSpec f;
  const auto count = parse_int_list(std::string_view(text).substr(0, x), 0);
  const std::size_t dash = text.find('-', x);
  const auto lo = parse_int_list(std::string_view(text).substr(x + 1, dash == std::string::npos ? std::string::npos : dash - x - 1), x + 1);
  const auto hi = dash == std::string::npos ? lo : parse_int_list(std::string_view(text).substr(dash + 1), dash + 1);
  if (count.size() != 1 || lo.size() != 1 || hi.size() != 1) throw ParseError("malformed clique forest spec", 0);
  f.count = count[0];
  f.min_order = lo[0];
  f.max_order = hi[0];
  return f;
}

inline std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Graphs from each file in order; stdin when no file (or "-") is given.
inline std::vector<Graph> read_inputs(const std::vector<std::string>& files, std::istream& in) {
  if (files.empty()) return parse_graphs(read_all(in));
  std::vector<Graph> out;
  for (const std::string& f : files) {
    std::string text;
    if (f == "-") {
      text = read_all(in);
    } else {
      std::ifstream file(f, std::ios::binary);
      if (!file) throw Error("cannot open " + f);
      text = read_all(file);
    }
    try {
      for (Graph& g : parse_graphs(text)) out.push_back(std::move(g));
    } catch (const ParseError& e) {
      throw ParseError(f + ": " + e.message(), e.offset());
    }
  }
  return out;
}

inline nlohmann::ordered_json vertex_list(VertexMask m) { return to_vector(m); }

}  // namespace detail

struct Options {
  int dp_limit = kDefaultDpLimit;
  std::vector<std::string> files;
  int theorem = 1;
  int s = 2;
  int sweep_n = 0;
  int sweep_s = 5;
  unsigned threads = 0;
  bool keep_going = false;
  std::string pdbg;
  std::string random_pdbg;
  std::string forest;
  std::optional<std::uint64_t> seed;
  int count = 1;
  bool self_check = false;
  std::optional<int> start;
  bool trace = false;
  std::vector<int> peel_s{2, 3, 4};
};

inline int cmd_weights(const Options& o, std::istream& in, std::ostream& out) {
  bool first = true;
  for (const Graph& g : detail::read_inputs(o.files, in)) {
    const VertexWeights w = weights_for(g, o.dp_limit);
    if (!first) out << '\n';
    first = false;
    out << "vertex\tp\tc\n";
    for (Vertex v = 0; v < g.order(); ++v)
      out << v << '\t' << w.p[static_cast<std::size_t>(v)] << '\t' << w.c[static_cast<std::size_t>(v)] << '\n';
    out << "circumference\t" << w.circumference << '\n';
  }
  return kOk;
}

inline int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  check_s(o.s);
  int status = kOk;
  for (const Graph& g : detail::read_inputs(o.files, in)) {
    const BoundReport r = check_theorem(g, o.s, o.theorem, weights_for(g, o.dp_limit));
    out << to_json(r).dump() << '\n';
    if (!r.passed()) status = kInconsistent;
  }
  return status;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.sweep_n < 0) throw ContractViolation("--n must be >= 0");
  const SweepSummary summary = exhaustive_verify(o.sweep_n, o.sweep_s, !o.keep_going, o.threads);
  out << to_json(summary).dump() << '\n';
  return summary.ok() ? kOk : kInconsistent;
}

inline int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  const int modes = !o.pdbg.empty() + !o.random_pdbg.empty() + !o.forest.empty();
  if (modes != 1) throw ContractViolation("gen needs exactly one of --pdbg, --random-pdbg, --clique-forest");
  if (o.count < 1) throw ContractViolation("--count must be >= 1");

  std::vector<Graph> graphs;
  int theorem = 1;
  if (!o.pdbg.empty()) {
    graphs.push_back(generate_pdbg(detail::parse_block_spec(o.pdbg)));
  } else if (!o.random_pdbg.empty()) {
    if (!o.seed) throw ContractViolation("--random-pdbg needs an explicit --seed");
    const auto limits = detail::parse_int_list(o.random_pdbg, 0);
    if (limits.size() != 2 || limits[0] < 1 || limits[1] < 2)
      throw ContractViolation("--random-pdbg takes MAX_BLOCKS,MAX_ORDER with MAX_BLOCKS >= 1, MAX_ORDER >= 2");
    Rng rng(*o.seed);
    for (int i = 0; i < o.count; ++i) graphs.push_back(generate_pdbg(random_pdbg_spec(rng, limits[0], limits[1])));
  } else {
    theorem = 2;
    const auto f = detail::parse_forest_spec(o.forest);
    if (f.min_order != f.max_order && !o.seed)
      throw ContractViolation("a clique forest with random orders needs an explicit --seed");
    Rng rng(o.seed.value_or(0));
    for (int i = 0; i < o.count; ++i) graphs.push_back(random_clique_forest(f.count, f.min_order, f.max_order, rng.next()));
  }

  int status = kOk;
  for (const Graph& g : graphs) {
    out << write_graph6(g) << '\n';
    if (!o.self_check) continue;
    const VertexWeights w = weights_for(g, o.dp_limit);
    for (int s = theorem == 1 ? 2 : 1; s <= 4; ++s) {
      const BoundReport r = check_theorem(g, s, theorem, w);
      if (r.in_scope && !r.equality) {
        err << "self-check: no equality for theorem " << theorem << " s=" << s << ": " << to_json(r).dump() << '\n';
        status = kInconsistent;
      }
    }
  }
  return status;
}

inline int cmd_peel(const Options& o, std::istream& in, std::ostream& out) {
  for (int s : o.peel_s)
    if (s < 2) throw ContractViolation("peel checks need s >= 2");
  int status = kOk;
  for (const Graph& g : detail::read_inputs(o.files, in)) {
    const PeelTrace trace = peel(g, o.start ? *o.start : default_peel_start(g, o.dp_limit), o.dp_limit);
    if (o.trace) {
      for (std::size_t i = 0; i < trace.stages.size(); ++i) {
        const PeelStage& st = trace.stages[i];
        out << nlohmann::ordered_json{{"stage", i},
                              {"graph6", write_graph6(st.graph)},
                              {"vertices", detail::vertex_list(st.alive)},
                              {"x", st.x},
                              {"path", st.path},
                              {"terminals", detail::vertex_list(st.terminals)}}
                   .dump()
            << '\n';
      }
    }
    bool identity = true;
    bool all_checks = true;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (int s : o.peel_s) {
      const PeelReport r = verify_peel_decomposition(g, trace, s);
      for (const auto& c : r.checks.checks) {
        if (c.pass) continue;
        all_checks = false;
        if (c.name == "decomposition") identity = false;
        failures.push_back({{"s", s}, {"check", c.name}, {"witness", c.witness}});
      }
    }
    out << nlohmann::ordered_json{{"graph6", write_graph6(g)},
                          {"u", trace.u},
                          {"stages", trace.stages.size()},
                          {"s", o.peel_s},
                          {"identity", identity},
                          {"verdict", all_checks ? "pass" : "fail"},
                          {"failures", failures}}
               .dump()
        << '\n';
    if (!all_checks) status = kInconsistent;
  }
  return status;
}

// Entry point for the locturan binary. Library errors map to exit status 2.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for vertex-localized clique bounds", "locturan"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--dp-limit", o.dp_limit, "largest order handled by the exact subset DP (hard max 22)")
      ->check(CLI::Range(0, kMaxDpLimit));

  auto* weights = app.add_subcommand("weights", "per-vertex p(v), c(v) as TSV");
  weights->add_option("files", o.files, "graph6 or edge-list files (stdin when absent)");

  auto* check = app.add_subcommand("check", "evaluate one theorem per input graph, JSON lines");
  check->add_option("--theorem", o.theorem, "1 (cycle weights) or 2 (path weights)")->required()->check(CLI::IsMember({1, 2}));
  check->add_option("--s", o.s, "clique order s >= 1")->required();
  check->add_option("files", o.files, "graph6 or edge-list files (stdin when absent)");

  auto* sweep = app.add_subcommand("sweep", "both theorems over every graph on at most N vertices");
  sweep->add_option("--n", o.sweep_n, "largest order (<= 8)")->required();
  sweep->add_option("--s", o.sweep_s, "largest clique order")->capture_default_str();
  sweep->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  sweep->add_flag("--keep-going", o.keep_going, "continue past the first order with a violation");

  auto* gen = app.add_subcommand("gen", "generate extremal graphs as graph6 lines");
  gen->add_option("--pdbg", o.pdbg, "block orders, e.g. 5,4,4,3 or 5,4,4,3:0,0,1 with parent indices");
  gen->add_option("--random-pdbg", o.random_pdbg, "MAX_BLOCKS,MAX_ORDER for random parent-dominated block graphs");
  gen->add_option("--clique-forest", o.forest, "COUNTxORDER or COUNTxMIN-MAX");
  gen->add_option("--seed", o.seed, "seed for randomized generators");
  gen->add_option("--count", o.count, "number of random graphs")->capture_default_str();
  gen->add_flag("--self-check", o.self_check, "check each generated graph attains equality");

  auto* peel_cmd = app.add_subcommand("peel", "run the peeling algorithm and check the decomposition");
  peel_cmd->add_option("--start", o.start, "start vertex u (default: lowest id of maximum c)");
  peel_cmd->add_flag("--trace", o.trace, "emit one JSON object per stage");
  peel_cmd->add_option("--s", o.peel_s, "clique orders to check (default 2 3 4)")->delimiter(',');
  peel_cmd->add_option("files", o.files, "graph6 or edge-list files (stdin when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*weights) return cmd_weights(o, in, out);
    if (*check) return cmd_check(o, in, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*gen) return cmd_gen(o, out, err);
    if (*peel_cmd) return cmd_peel(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"locturan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace locturan::cli
