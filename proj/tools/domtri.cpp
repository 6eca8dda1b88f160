// domtri: generate plane graphs, color them, compute dominating sets and run
// bound sweeps. Exit codes: 0 everything holds, 1 invariant breach or
// conjecture candidate, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "domtri/audit.h"
#include "domtri/error.h"
#include "domtri/pgr_io.h"
#include "domtri/report.h"
#include "domtri/sweep.h"
#include "domtri/trace_io.h"

using namespace domtri;

namespace {

constexpr int kOk = 0;
constexpr int kBreach = 1;
constexpr int kUsage = 2;

struct GenArgs {
  std::string family;
  int size = 0;
  std::uint64_t seed = 1;
  int flips = 200;
  int budget = 4000;
  int removals = 6;
  std::string out;
  std::string trace_out;
};

PlaneGraph generate(const GenArgs& a, std::optional<BuildTrace>& trace) {
  const Seed seed{a.seed};
  static const std::map<std::string, PlaneGraph (*)()> fixed{
      {"triangle", triangle}, {"k4", k4}, {"octahedron", octahedron}, {"icosahedron", icosahedron}};
  if (auto it = fixed.find(a.family); it != fixed.end()) return it->second();
  if (a.family == "diamond_chain") return diamond_chain(a.size);
  if (a.family == "k4_chain") return k4_chain(a.size);
  if (a.family == "three_tree" || a.family == "eulerian") {
    Generated gen = a.family == "three_tree" ? planar_three_tree(a.size, seed) : recursive_eulerian(a.size, seed);
    trace = std::move(gen.trace);
    return std::move(gen.graph);
  }
  if (a.family == "random") return random_triangulation(a.size, seed, a.flips);
  if (a.family == "near") {
    const PlaneGraph t = random_triangulation(a.size + 1, seed, a.flips);
    return near_triangulation_from(t, static_cast<VertexId>(seed.derive(7).value % (a.size + 1)));
  }
  if (a.family == "min_degree5" || a.family == "odd_degree") {
    auto s = a.family == "min_degree5" ? min_degree5_sample(a.size, seed, a.budget)
                                       : all_odd_sample(a.size, seed, a.budget);
    if (!s) throw Error("no " + a.family + " sample found for n = " + std::to_string(a.size) + " within the budget");
    return std::move(*s);
  }
  if (a.family == "connected") return random_connected_plane(a.size, seed, a.removals);
  throw Error("unknown family " + a.family);
}

int run_gen(const GenArgs& a) {
  std::optional<BuildTrace> trace;
  const PlaneGraph g = generate(a, trace);
  if (a.out.empty())
    std::cout << to_pgr(g);
  else
    write_pgr_file(a.out, g);
  if (!a.trace_out.empty()) {
    if (!trace) {
      std::cerr << a.family << " has no build trace\n";
      return kUsage;
    }
    write_trace_file(a.trace_out, *trace);
  }
  return kOk;
}

int run_color(const std::string& file, const std::string& method, const std::string& trace_file) {
  const PlaneGraph g = read_pgr_file(file);
  Coloring c;
  if (method == "four") {
    c = four_coloring(g);
  } else {
    if (trace_file.empty()) {
      std::cerr << "--trace is required for " << method << '\n';
      return kUsage;
    }
    const BuildTrace t = read_trace_file(trace_file);
    c = method == "stacked" ? stacked_four_coloring(g, t) : rec_eulerian_six_coloring(g, t);
  }
  std::cout << coloring_to_text(c);
  return kOk;
}

int run_dominate(const std::string& file, const std::string& method, const std::string& coloring_file) {
  const PlaneGraph g = read_pgr_file(file);
  DominationResult r;
  if (method == "combinator") {
    const Coloring c = coloring_file.empty() ? four_coloring(g) : read_coloring_file(coloring_file, g.vertex_count());
    r = class_combinator(g, c);
  } else if (method == "iota") {
    r = exact_iota(g);
  } else {
    r = exact_gamma(g);
  }
  std::cout << to_string(r.method) << ' ' << r.size << ':';
  for (VertexId v : r.set) std::cout << ' ' << v;
  std::cout << '\n';
  return kOk;
}

void print_failures(const BoundReport& r, std::ostream& os) {
  for (const Breach& b : r.breaches) os << r.id << ": BREACH " << b.what << '\n' << b.payload;
  for (const std::string& e : r.errors) os << r.id << ": ERROR " << e << '\n';
}

int run_sweep_cmd(const std::string& config, std::string structured, std::string tabular, int threads) {
  SweepConfig cfg = read_sweep_config(config);
  apply_seed_override(cfg);
  if (threads > 0) cfg.threads = threads;
  if (!structured.empty()) cfg.structured_path = structured;
  if (!tabular.empty()) cfg.tabular_path = tabular;
  const std::vector<BoundReport> reports = run_sweep(cfg);
  if (!cfg.structured_path.empty())
    emit_to_file(reports, ReportFormat::Structured, cfg.structured_path, cfg.timings);
  if (!cfg.tabular_path.empty()) emit_to_file(reports, ReportFormat::Tabular, cfg.tabular_path, cfg.timings);
  if (cfg.structured_path.empty() && cfg.tabular_path.empty())
    std::cout << emit_tabular(reports, cfg.timings);

  std::size_t records = 0, failing_bounds = 0, bad = 0;
  for (const BoundReport& r : reports) {
    records += r.bounds.size();
    for (const BoundRecord& b : r.bounds) failing_bounds += !b.holds;
    if (!r.ok()) {
      ++bad;
      print_failures(r, std::cerr);
    }
  }
  std::cerr << reports.size() << " graphs, " << records << " bound records, " << failing_bounds
            << " not holding, " << bad << " graphs with breaches or errors\n";
  return bad ? kBreach : kOk;
}

int run_verify(const std::string& file, const std::string& trace_file, const std::string& family) {
  GraphItem item{family, std::filesystem::path(file).stem().string(), 0, read_pgr_file(file), std::nullopt};
  if (!trace_file.empty()) item.trace = read_trace_file(trace_file);
  const BoundReport r = analyze(item);
  std::cout << "n=" << r.n << " class=" << to_string(r.graph_class.kind);
  if (r.combinator) std::cout << " combinator=" << *r.combinator;
  if (r.combinator6) std::cout << " combinator6=" << *r.combinator6;
  std::cout << " iota=" << (r.iota ? std::to_string(*r.iota) : r.iota_status)
            << " gamma=" << (r.gamma ? std::to_string(*r.gamma) : r.gamma_status) << '\n';
  for (const BoundRecord& b : r.bounds)
    std::cout << (b.holds ? "holds " : "FAILS ") << b.bound << ": " << b.lhs << ' ' << to_string(b.relation) << ' '
              << format_rational(b.rhs) << " (" << to_string(b.kind) << ")\n";
  int failing_checks = 0;
  for (const CheckRecord& c : r.checks) {
    if (c.check.holds) continue;
    ++failing_checks;
    std::cout << (c.kind == CheckKind::Finding ? "finding " : "FAILS ") << c.check.name << '\n';
  }
  std::cout << r.checks.size() << " checks, " << failing_checks << " not holding\n";
  print_failures(r, std::cerr);
  return r.ok() ? kOk : kBreach;
}

int run_audit(const std::string& file) {
  const AuditSummary s = audit_conjectures(read_structured_file(file));
  std::cout << s.to_text();
  return s.alarmed() ? kBreach : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independent domination in plane triangulations"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a plane graph as PGR text");
  gen_cmd->add_option("family", gen.family, "triangle, k4, octahedron, icosahedron, diamond_chain, k4_chain, "
                                            "three_tree, eulerian, random, near, min_degree5, odd_degree, connected")
      ->required();
  gen_cmd->add_option("-n,--size", gen.size, "n, or k for chains, or t for eulerian");
  gen_cmd->add_option("-s,--seed", gen.seed);
  gen_cmd->add_option("--flips", gen.flips);
  gen_cmd->add_option("--budget", gen.budget);
  gen_cmd->add_option("--removals", gen.removals);
  gen_cmd->add_option("-o,--output", gen.out);
  gen_cmd->add_option("--trace", gen.trace_out, "write the build trace (three_tree, eulerian)");

  std::string file, method, aux, family, structured, tabular;
  int threads = 0;

  auto* color_cmd = app.add_subcommand("color", "Color a PGR graph");
  color_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  color_cmd->add_option("-m,--method", method)->check(CLI::IsMember({"four", "stacked", "eulerian6"}))
      ->default_val("four");
  color_cmd->add_option("--trace", aux)->check(CLI::ExistingFile);

  auto* dom_cmd = app.add_subcommand("dominate", "Compute an independent dominating or dominating set");
  dom_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  dom_cmd->add_option("-m,--method", method)->check(CLI::IsMember({"combinator", "iota", "gamma"}))
      ->default_val("combinator");
  dom_cmd->add_option("--coloring", aux, "coloring for the combinator (default: a 4-coloring)")
      ->check(CLI::ExistingFile);

  auto* sweep_cmd = app.add_subcommand("sweep", "Run a bound sweep");
  sweep_cmd->add_option("-c,--config", file)->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--structured", structured, "JSON report path");
  sweep_cmd->add_option("--tabular", tabular, "TSV report path");
  sweep_cmd->add_option("-j,--threads", threads);

  auto* verify_cmd = app.add_subcommand("verify", "Run every applicable check on one graph");
  verify_cmd->add_option("file", file)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--trace", aux)->check(CLI::ExistingFile);
  verify_cmd->add_option("--family", family, "enables family checks (three_tree, eulerian, diamond_chain, k4_chain)");

  auto* audit_cmd = app.add_subcommand("audit", "Audit the conjectured bounds over a JSON report");
  audit_cmd->add_option("reports", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*color_cmd) return run_color(file, method, aux);
    if (*dom_cmd) return run_dominate(file, method, aux);
    if (*sweep_cmd) return run_sweep_cmd(file, structured, tabular, threads);
    if (*verify_cmd) return run_verify(file, aux, family);
    if (*audit_cmd) return run_audit(file);
  } catch (const InvariantBreach& e) {
    std::cerr << "breach: " << e.what() << '\n' << e.payload();
    return kBreach;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
