#include "wgd/cli.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgd/error.hpp"
#include "wgd/geometry.hpp"
#include "wgd/io.hpp"
#include "wgd/oracle.hpp"
#include "wgd/solver.hpp"

namespace wgd::cli {

namespace {

using nlohmann::json;

enum class Format { kJson, kText };

struct RunConfig {
  std::string graph_path;
  std::string demands_path;
  std::string cells_path;
  std::string partition_path;
  std::string svg_path;
  std::string show_circle;
  double radius = 2.1;
  std::string scheme_name = "half-degree";
  std::string loop_mode_name = "double";
  std::string format_name = "json";
  DemandScheme scheme = DemandScheme::kHalfDegree;
  LoopMode loop_mode = LoopMode::kDouble;
  double tolerance = 0.0;
  std::size_t max_moves = 1'000'000;
  std::uint64_t seed = 0;
  Format format = Format::kJson;

  // gen
  std::size_t n = 10;
  double edge_probability = 0.8;
  double weight_min = 0.5;
  double weight_max = 1.5;
};

json labels_of(const WeightedGraph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex x : s.elements()) out.push_back(g.label(x));
  return out;
}

std::string joined(const WeightedGraph& g, const VertexSet& s) {
  std::string out;
  for (Vertex x : s.elements()) {
    if (!out.empty()) out += ' ';
    out += g.label(x);
  }
  return out;
}

json violations_json(const WeightedGraph& g, const std::vector<Violation>& vs) {
  json out = json::array();
  for (const Violation& v : vs) {
    out.push_back({{"vertex", g.label(v.vertex)},
                   {"side", std::string(to_string(v.side))},
                   {"degree", v.degree},
                   {"demand", v.demand}});
  }
  return out;
}

void emit(std::ostream& out, Format format, const json& doc,
          const std::string& text) {
  if (format == Format::kJson) {
    out << doc.dump() << '\n';
  } else {
    out << text;
  }
}

Demands load_demands(const RunConfig& cfg, const WeightedGraph& g) {
  if (cfg.demands_path.empty()) return Demands::zero(g.size());
  return io::read_demands(cfg.demands_path, g);
}

bool reported_feasible(const SolveCertificate& cert) {
  return cert.reduced_feasibility ? cert.reduced_feasibility->feasible()
                                  : cert.feasibility.feasible();
}

json solve_json(const WeightedGraph& g, const Partition& p,
                const SolveCertificate& cert) {
  return {{"A", labels_of(g, p.set_a())},
          {"B", labels_of(g, p.set_b())},
          {"h_trace", cert.h_trace},
          {"moves", cert.moves.size()},
          {"violations", json::array()},
          {"feasible", reported_feasible(cert)}};
}

std::string solve_text(const WeightedGraph& g, const Partition& p,
                       const SolveCertificate& cert) {
  std::ostringstream s;
  s << "A: " << joined(g, p.set_a()) << '\n'
    << "B: " << joined(g, p.set_b()) << '\n'
    << "moves: " << cert.moves.size() << '\n'
    << "feasible: " << (reported_feasible(cert) ? "true" : "false") << '\n'
    << "violations: none\n";
  return s.str();
}

// Solver failures on well-formed input: exit 1 with a machine-readable body.
int report_no_partition(std::ostream& out, std::ostream& err, Format format,
                        const Error& e, bool feasible) {
  json doc = {{"error", std::string(to_string(e.kind()))},
              {"message", e.what()},
              {"feasible", feasible}};
  emit(out, format, doc,
       "no partition: " + std::string(to_string(e.kind())) + "\n");
  err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  return 1;
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = io::read_graph(cfg.graph_path, cfg.loop_mode);
  const Demands demands = load_demands(cfg, g);
  SolveOptions options;
  options.max_moves = cfg.max_moves;
  try {
    const SolveResult r = solve(g, demands, options);
    emit(out, cfg.format, solve_json(g, r.partition, r.certificate),
         solve_text(g, r.partition, r.certificate));
    return 0;
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    const bool feasible = g.has_loops()
                              ? reduce_loops(g, demands).precondition.feasible()
                              : check_feasibility(g, demands).feasible();
    return report_no_partition(out, err, cfg.format, e, feasible);
  }
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  const WeightedGraph g = io::read_graph(cfg.graph_path, cfg.loop_mode);
  const Demands demands = load_demands(cfg, g);
  OracleOptions options;
  options.tolerance = cfg.tolerance;
  const OracleResult r = brute_force_solve(g, demands, options);
  json doc = {{"exists", r.exists}, {"count", r.count}};
  std::ostringstream text;
  text << "exists: " << (r.exists ? "true" : "false") << '\n'
       << "count: " << r.count << '\n';
  if (r.witness) {
    doc["witness"] = {{"A", labels_of(g, r.witness->set_a())},
                      {"B", labels_of(g, r.witness->set_b())}};
    text << "witness A: " << joined(g, r.witness->set_a()) << '\n'
         << "witness B: " << joined(g, r.witness->set_b()) << '\n';
  } else {
    doc["witness"] = nullptr;
  }
  emit(out, cfg.format, doc, text.str());
  return r.exists ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const WeightedGraph g = io::read_graph(cfg.graph_path, cfg.loop_mode);
  const Demands demands = load_demands(cfg, g);
  std::istringstream body(io::read_file(cfg.partition_path));
  const Partition p = io::parse_partition_json(body, g);
  const auto violations = verify_partition(g, demands, p, cfg.tolerance);
  json doc = {{"stable", violations.empty()},
              {"violations", violations_json(g, violations)}};
  std::ostringstream text;
  text << "stable: " << (violations.empty() ? "true" : "false") << '\n';
  for (const Violation& v : violations) {
    text << "violation: " << g.label(v.vertex) << " side " << to_string(v.side)
         << " degree " << io::format_real(v.degree) << " < demand "
         << io::format_real(v.demand) << '\n';
  }
  emit(out, cfg.format, doc, text.str());
  return violations.empty() ? 0 : 1;
}

std::optional<Cell> parse_cell_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto comma = text.find(',');
  Cell c;
  auto parse = [&](std::string_view part, int& value) {
    auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    return ec == std::errc() && ptr == part.data() + part.size();
  };
  const std::string_view all(text);
  if (comma == std::string::npos || !parse(all.substr(0, comma), c.i) ||
      !parse(all.substr(comma + 1), c.j)) {
    throw Error(ErrorKind::kParseError,
                "--show-circle expects 'i,j', got '" + text + "'");
  }
  return c;
}

int run_squares(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  GridInstance instance{io::read_cells(cfg.cells_path), cfg.radius};
  const auto circle = parse_cell_flag(cfg.show_circle);
  SolveOptions options;
  options.max_moves = cfg.max_moves;

  std::optional<SquaresResult> r;
  try {
    r = solve_squares(instance, cfg.scheme, cfg.loop_mode, options);
  } catch (const Error& e) {
    if (is_input_error(e.kind())) throw;
    return report_no_partition(out, err, cfg.format, e, false);
  }

  const SquaresDiagnostics& diag = r->diagnostics;
  json doc = solve_json(r->graph, r->partition, r->certificate);
  doc["feasible"] = diag.precondition_held;
  doc["graph_stable"] = diag.graph_stable;
  doc["radius"] = cfg.radius;
  doc["scheme"] = std::string(to_string(cfg.scheme));
  doc["loop_mode"] = std::string(to_string(cfg.loop_mode));
  doc["strict_majority"] = diag.strict_majority;
  json cells = json::array();
  std::ostringstream text;
  text << solve_text(r->graph, r->partition, r->certificate)
       << "graph_stable: " << (diag.graph_stable ? "true" : "false") << '\n'
       << "strict_majority: " << diag.strict_majority << " of "
       << instance.cells.size() << '\n';
  for (Vertex k = 0; k < instance.cells.size(); ++k) {
    const std::string side(to_string(r->partition.side(k)));
    cells.push_back({{"cell", r->graph.label(k)},
                     {"side", side},
                     {"margin", diag.physical_margin[k]}});
    text << "cell " << r->graph.label(k) << ' ' << side << " margin "
         << io::format_real(diag.physical_margin[k]) << '\n';
  }
  doc["cells"] = std::move(cells);

  if (!cfg.svg_path.empty()) {
    io::SvgOptions svg;
    svg.circle_at = circle;
    svg.radius = cfg.radius;
    io::write_file(cfg.svg_path,
                   io::render_svg(instance.cells, r->partition, svg));
  }
  emit(out, cfg.format, doc, text.str());
  return 0;
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
  InstanceSpec spec;
  spec.n = cfg.n;
  spec.edge_probability = cfg.edge_probability;
  spec.weight_min = cfg.weight_min;
  spec.weight_max = cfg.weight_max;
  spec.seed = cfg.seed;
  spec.loop_mode = cfg.loop_mode;
  const Instance inst = random_feasible_instance(spec);
  io::write_file(cfg.graph_path, io::format_edges(inst.graph));
  io::write_file(cfg.demands_path,
                 io::format_demands(inst.graph, inst.demands));
  const std::size_t edges = inst.graph.edges().size();
  json doc = {{"n", inst.graph.size()},
              {"edges", edges},
              {"seed", cfg.seed},
              {"feasible", check_feasibility(inst.graph, inst.demands).feasible()}};
  emit(out, cfg.format, doc,
       "n: " + std::to_string(inst.graph.size()) +
           "\nedges: " + std::to_string(edges) + "\n");
  return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Two-sided degree-constrained partitions of weighted graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, LoopMode> loop_modes{
      {"once", LoopMode::kOnce}, {"double", LoopMode::kDouble}};
  const std::map<std::string, Format> formats{{"json", Format::kJson},
                                              {"text", Format::kText}};
  const std::map<std::string, DemandScheme> schemes{
      {"half-degree", DemandScheme::kHalfDegree},
      {"physical", DemandScheme::kPhysicalMajority}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--loop-mode", cfg.loop_mode_name, "once|double")
        ->check(CLI::IsMember({"once", "double"}));
    sub->add_option("--format", cfg.format_name, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", cfg.seed, "RNG seed");
  };
  auto graph_inputs = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "edge list")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--demands", cfg.demands_path, "demand list")
        ->check(CLI::ExistingFile);
  };
  auto max_moves = [&](CLI::App* sub) {
    sub->add_option("--max-moves", cfg.max_moves, "hill-climb move cap")
        ->check(CLI::PositiveNumber);
  };
  auto tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", cfg.tolerance, "demand slack")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "find a stable partition");
  common(solve_cmd);
  graph_inputs(solve_cmd);
  max_moves(solve_cmd);

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive search over all splits");
  common(oracle_cmd);
  graph_inputs(oracle_cmd);
  tolerance(oracle_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check a partition against the demands");
  common(verify_cmd);
  graph_inputs(verify_cmd);
  tolerance(verify_cmd);
  verify_cmd->add_option("--partition", cfg.partition_path, "solve output")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* squares_cmd =
      app.add_subcommand("squares", "two-colour grid cells by disk coverage");
  common(squares_cmd);
  max_moves(squares_cmd);
  squares_cmd->add_option("--cells", cfg.cells_path, "cell list")
      ->required()
      ->check(CLI::ExistingFile);
  squares_cmd->add_option("--radius", cfg.radius, "disk radius")
      ->check(CLI::PositiveNumber);
  squares_cmd->add_option("--scheme", cfg.scheme_name, "half-degree|physical")
      ->check(CLI::IsMember({"half-degree", "physical"}));
  squares_cmd->add_option("--svg", cfg.svg_path, "write an SVG colouring");
  squares_cmd->add_option("--show-circle", cfg.show_circle,
                          "overlay the disk of cell i,j");

  CLI::App* gen_cmd =
      app.add_subcommand("gen", "write a random instance meeting the bound");
  common(gen_cmd);
  gen_cmd->add_option("--graph", cfg.graph_path, "edge list to write")
      ->required();
  gen_cmd->add_option("--demands", cfg.demands_path, "demand list to write")
      ->required();
  gen_cmd->add_option("--n", cfg.n, "vertex count")->check(CLI::Range(2, 64));
  gen_cmd->add_option("--edge-probability", cfg.edge_probability)
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--weight-min", cfg.weight_min)
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--weight-max", cfg.weight_max)
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return 2;
  }
  cfg.loop_mode = loop_modes.at(cfg.loop_mode_name);
  cfg.format = formats.at(cfg.format_name);
  cfg.scheme = schemes.at(cfg.scheme_name);

  try {
    if (solve_cmd->parsed()) return run_solve(cfg, out, err);
    if (oracle_cmd->parsed()) return run_oracle(cfg, out);
    if (verify_cmd->parsed()) return run_verify(cfg, out);
    if (squares_cmd->parsed()) return run_squares(cfg, out, err);
    return run_gen(cfg, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_input_error(e.kind()) ? 2 : 1;
  }
}

}  // namespace wgd::cli
