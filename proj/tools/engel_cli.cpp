// engel: Engel graphs of finite groups from the command line.
//
//   engel analyze "PSL(2,13)" --mode gamma --diameter
//   engel verify core
//   engel survey PSL2 5..31 --store results.jsonl
//   engel export "A(5)" --format dot -o a5.dot

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "engel/catalog.hpp"
#include "engel/config.hpp"
#include "engel/connectivity.hpp"
#include "engel/error.hpp"
#include "engel/field.hpp"
#include "engel/parser.hpp"
#include "engel/record.hpp"
#include "engel/verify.hpp"

using namespace engel;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr std::size_t kDotVertexLimit = 4096;

struct GraphArgs {
  std::string mode = "gamma";
  unsigned n = 2;
  bool no_equivariance = false;
  bool no_condensation = false;
  bool diameter = false;

  GraphMode graph_mode() const { return GraphMode::parse(mode, n); }
  std::vector<std::string> flags() const {
    std::vector<std::string> f;
    f.push_back(no_equivariance ? "no-equivariance" : "equivariance");
    f.push_back(no_condensation ? "no-condensation" : "condensation");
    if (diameter) f.push_back("diameter");
    return f;
  }
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--mode", a.mode, "graph: gamma, gamma_n, lambda or delta")
      ->check(CLI::IsMember({"gamma", "gamma_n", "lambda", "delta"}));
  cmd->add_option("--n", a.n, "bound for gamma_n")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-equivariance", a.no_equivariance, "do not use conjugation symmetry");
  cmd->add_flag("--no-condensation", a.no_condensation, "run SCC on the plain graph");
}

std::string mode_text(const GraphMode& m) {
  return m.bounded() ? m.name() + "(" + std::to_string(m.n) + ")" : m.name();
}

ResultRecord run_analysis(const std::string& text, const GraphArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  GroupSpecExpr expr = parse_group_expr(text);
  Group g = make_group(expr);
  GraphMode mode = a.graph_mode();
  AnalysisOptions opt;
  opt.equivariance = !a.no_equivariance;
  opt.condensation = !a.no_condensation;
  opt.diameters = a.diameter;
  Analysis an = analyze(g, mode, opt);

  ResultRecord r;
  r.expr = print_group_expr(expr);
  r.order = an.order;
  r.mode = mode.name();
  if (mode.bounded()) r.n = mode.n;
  r.vertex_count = an.vertex_count;
  r.strongly_connected = an.strongly_connected;
  r.weakly_connected = an.weakly_connected;
  r.scc_count = an.scc_count;
  r.undirected_diameter = an.undirected.text();
  r.directed_diameter = an.directed.text();
  r.verdict = an.verdict;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.version = ENGEL_VERSION;
  r.flags = a.flags();
  r.seed = 0;
  return r;
}

std::string record_key(const std::string& expr, const std::string& mode, std::optional<unsigned> n) {
  return expr + " " + mode + (n ? " " + std::to_string(*n) : "");
}

// "5..31" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      std::int64_t v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("range must look like LO..HI, got '" + s + "'");
  }
}

std::vector<std::string> survey_expressions(const std::string& family, std::int64_t lo, std::int64_t hi) {
  std::vector<std::string> out;
  for (std::int64_t v = std::max<std::int64_t>(lo, 1); v <= hi; ++v) {
    const std::string s = std::to_string(v);
    if (family == "PSL2") {
      if (v > 2 && is_prime(static_cast<std::uint64_t>(v))) out.push_back("PSL(2," + s + ")");
    } else if (family == "S" || family == "A") {
      if (v >= 2) out.push_back(family + "(" + s + ")");
    } else if (family == "C") {
      out.push_back("C(" + s + ")");
    } else if (family == "D") {
      if (v % 2 == 0) out.push_back("D(" + s + ")");
    } else {
      throw InvalidArgument("unknown survey family '" + family + "' (expected PSL2, S, A, C or D)");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// export

void write_edgelist(std::ostream& os, const std::string& expr, const EngelGraph& eg, const SccResult* cond) {
  os << "# " << expr << " " << mode_text(eg.mode) << " " << eg.digraph.size() << "\n";
  if (cond) {
    os << "# condensation " << cond->count << "\n";
    for (auto [u, v] : cond->condensation_edges) os << u << " " << v << "\n";
    return;
  }
  for (std::size_t u = 0; u < eg.digraph.size(); ++u)
    eg.digraph.out_rows().for_each_in_row(u, [&](std::size_t v) { os << u << " " << v << "\n"; });
}

void write_dot(std::ostream& os, const std::string& expr, const EngelGraph& eg, const SccResult& comps, bool condensed) {
  const Group& g = eg.group;
  os << "digraph \"" << expr << " " << mode_text(eg.mode) << "\" {\n";
  if (condensed) {
    std::vector<std::uint64_t> size(comps.count, 0);
    std::vector<std::uint32_t> order(comps.count, 0);
    for (std::size_t v = 0; v < comps.component.size(); ++v) {
      auto c = comps.component[v];
      if (size[c]++ == 0) order[c] = g.element_orders()[eg.vertex_elements[v]];
    }
    for (std::uint32_t c = 0; c < comps.count; ++c)
      os << "  " << c << " [scc=" << c << ", size=" << size[c] << ", order=" << order[c] << "];\n";
    for (auto [u, v] : comps.condensation_edges) os << "  " << u << " -> " << v << ";\n";
  } else {
    for (std::size_t v = 0; v < eg.vertex_elements.size(); ++v)
      os << "  " << v << " [order=" << g.element_orders()[eg.vertex_elements[v]] << ", scc=" << comps.component[v]
         << "];\n";
    for (std::size_t u = 0; u < eg.digraph.size(); ++u)
      eg.digraph.out_rows().for_each_in_row(u, [&](std::size_t v) { os << "  " << u << " -> " << v << ";\n"; });
  }
  os << "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engel graphs of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ENGEL_VERSION);

  Limits limits = Limits::from_environment();
  app.add_option("--max-order-stored", limits.max_order_stored, "largest group kept as a table");
  app.add_option("--max-order-stream", limits.max_order_stream, "largest group scanned without a table");
  app.add_option("--memory-mb", limits.memory_budget_mb, "budget for dense adjacency storage");
  app.add_option("--threads", limits.threads, "worker threads (0 = all cores)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "connectivity and diameters of one graph");
  std::string analyze_expr;
  std::string analyze_store;
  GraphArgs analyze_args;
  analyze_cmd->add_option("expr", analyze_expr, "group expression, e.g. PSL(2,13)")->required();
  add_graph_options(analyze_cmd, analyze_args);
  analyze_cmd->add_flag("--diameter", analyze_args.diameter, "compute directed and undirected diameters");
  analyze_cmd->add_option("--store", analyze_store, "also append the record to this store");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-check the claim suites");
  std::string suite_name = "core";
  verify_cmd->add_option("suite", suite_name, "core, extended, nightly or full")
      ->check(CLI::IsMember({"core", "extended", "nightly", "full"}));

  // survey
  auto* survey_cmd = app.add_subcommand("survey", "analyze a family over a range, resumably");
  std::string family, range, survey_store;
  GraphArgs survey_args;
  survey_cmd->add_option("family", family, "PSL2, S, A, C or D")->required();
  survey_cmd->add_option("range", range, "LO..HI")->required();
  survey_cmd->add_option("--store", survey_store, "result store (one record per line)")->required();
  add_graph_options(survey_cmd, survey_args);
  survey_cmd->add_flag("--diameter", survey_args.diameter, "compute diameters");

  // export
  auto* export_cmd = app.add_subcommand("export", "write a graph as DOT or an edge list");
  std::string export_expr, format = "edgelist", output;
  GraphArgs export_args;
  export_cmd->add_option("expr", export_expr, "group expression")->required();
  add_graph_options(export_cmd, export_args);
  export_cmd->add_option("--format", format, "dot or edgelist")->check(CLI::IsMember({"dot", "edgelist"}));
  export_cmd->add_option("-o,--output", output, "output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  set_default_limits(limits);

  try {
    if (*analyze_cmd) {
      ResultRecord r = run_analysis(analyze_expr, analyze_args);
      std::cout << r.to_json() << "\n";
      if (!analyze_store.empty()) ResultStore(analyze_store).append(r);
      return kExitOk;
    }

    if (*verify_cmd) {
      auto results = run_suite(*parse_suite(suite_name), &std::cout);
      std::size_t failed = 0, inconclusive = 0;
      for (const auto& r : results) {
        if (r.outcome == Outcome::fail) ++failed;
        if (r.outcome == Outcome::inconclusive) ++inconclusive;
      }
      std::cout << results.size() << " checks, " << failed << " failed, " << inconclusive << " inconclusive\n";
      return failed ? kExitUsage : kExitOk;
    }

    if (*survey_cmd) {
      auto [lo, hi] = parse_range(range);
      ResultStore store(survey_store);
      StoreContents existing = store.load();
      for (auto line : existing.corrupt_lines)
        std::cerr << "warning: " << survey_store << ":" << line << ": corrupt record skipped\n";
      std::set<std::string> done;
      for (const auto& r : existing.records) done.insert(record_key(r.expr, r.mode, r.n));
      const GraphMode mode = survey_args.graph_mode();
      std::optional<unsigned> n;
      if (mode.bounded()) n = mode.n;
      std::size_t added = 0, skipped = 0;
      for (const auto& text : survey_expressions(family, lo, hi)) {
        const std::string canon = print_group_expr(parse_group_expr(text));
        if (done.count(record_key(canon, mode.name(), n))) {
          ++skipped;
          continue;
        }
        ResultRecord r;
        try {
          r = run_analysis(text, survey_args);
        } catch (const CapExceeded& e) {
          std::cerr << text << ": skipped, " << e.what() << "\n";
          continue;
        }
        store.append(r);
        ++added;
        std::cout << r.expr << " " << r.verdict << " (" << r.scc_count << " strong components)\n";
      }
      std::cout << added << " new records, " << skipped << " already present\n";
      return kExitOk;
    }

    if (*export_cmd) {
      GroupSpecExpr expr = parse_group_expr(export_expr);
      Group g = make_group(expr);
      EngelGraph eg = build_engel_graph(g, export_args.graph_mode(), GraphOptions{!export_args.no_equivariance});
      SccResult comps = graph_scc(eg, !export_args.no_condensation);
      const bool condensed = eg.digraph.size() > kDotVertexLimit;
      std::ostringstream os;
      const std::string name = print_group_expr(expr);
      if (format == "dot")
        write_dot(os, name, eg, comps, condensed);
      else
        write_edgelist(os, name, eg, condensed ? &comps : nullptr);
      if (output.empty()) {
        std::cout << os.str();
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw Error("cannot write '" + output + "'");
        out << os.str();
      }
      return kExitOk;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
