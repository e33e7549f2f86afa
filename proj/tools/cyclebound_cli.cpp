// Command-line front end: analyze, bounds, enumerate, gen-weights, bench.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cyclebound/cyclebound.hpp"

namespace cb = cyclebound;

namespace {

// Raised for problems that should end the process with a nonzero status.
struct FatalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cb::WeightedDigraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FatalError("cannot open " + path);
  try {
    return cb::parse_edge_list(in);
  } catch (const cb::ParseError& e) {
    throw FatalError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw FatalError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FatalError("cannot write " + path);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

std::string interval_text(const cb::Interval& iv) {
  if (iv.is_unbounded()) return "(no bound)";
  if (iv.lo && iv.hi && *iv.lo == *iv.hi) return "= " + iv.lo->to_string();
  std::string s;
  if (iv.lo) s += ">= " + iv.lo->to_string();
  if (iv.hi) s += std::string(s.empty() ? "" : ", ") + "<= " + iv.hi->to_string();
  return s;
}

void print_bounds(const cb::AnalysisResult& res, std::ostream& os) {
  os << "nodes " << res.node_count << ", arcs " << res.arc_count << ", components " << res.component_count
     << " (" << res.trivial_count << " trivial)\n";
  for (const cb::ComponentRecord& r : res.records) {
    os << "\ncomponent " << r.component_id << ": n=" << r.n << " m=" << r.m << "\n";
    if (!r.error.empty()) {
      os << "  error: " << r.error << "\n";
      continue;
    }
    const cb::BoundReport& b = r.bounds;
    os << "  lambda_min = " << r.lambda_min << "  lambda_max = " << r.lambda_max << "  sign(w(L)): " << cb::to_string(b.sign)
       << "\n";
    os << "  critical min: " << b.critical_min.count << " cycles, |C| in [" << b.critical_min.min_length << ","
       << b.critical_min.max_length << "], w in [" << b.critical_min.min_weight << "," << b.critical_min.max_weight
       << "]" << (b.critical_min.truncated ? " (truncated)" : "") << "\n";
    os << "  critical max: " << b.critical_max.count << " cycles, |C| in [" << b.critical_max.min_length << ","
       << b.critical_max.max_length << "], w in [" << b.critical_max.min_weight << "," << b.critical_max.max_weight
       << "]" << (b.critical_max.truncated ? " (truncated)" : "") << "\n";
    const auto line = [&](const char* name, const cb::CycleBounds& cbd) {
      os << "  " << name << " (case " << cbd.theorem_case << "): w " << interval_text(cbd.weight) << "; len "
         << interval_text(cbd.length) << (cbd.possibly_loose ? "  [critical set truncated]" : "") << "\n";
    };
    line("max-weight cycle", b.max_weight);
    line("max-length cycle", b.max_length);
    line("min-weight cycle", b.min_weight);
    line("min-length cycle", b.min_length);
    os << "  any cycle L: " << b.parametric.per_arc_lo << " |L| <= w(L) <= " << b.parametric.per_arc_hi << " |L|\n";
    if (b.path.length_lo) os << "  longest path length >= " << *b.path.length_lo << "\n";
    if (b.path.weight_lo) {
      os << "  heaviest path weight >= " << *b.path.weight_lo << (b.path.weight_vacuous ? " (vacuous)" : "") << "\n";
    }
    if (b.rho) os << "  rho = " << *b.rho << "\n";
    const cb::EstimateReport& e = r.estimates;
    os << "  lambda_avg = " << e.lambda_avg << "  (abs error <= " << e.abs_error_bound_avg;
    if (e.rel_error_bound_avg) os << ", rel error <= " << *e.rel_error_bound_avg;
    os << ")\n";
    if (e.lambda_geo) {
      os << "  lambda_geo = " << cb::report_detail::fixed(*e.lambda_geo, 6) << "  (abs error <= " << *e.abs_error_bound_geo
         << ", rel error <= " << cb::report_detail::fixed(*e.rel_error_bound_geo, 6) << ")\n";
    }
  }
}

cb::Report to_report(const std::string& name, const cb::AnalysisResult& res) {
  cb::Report rep;
  rep.meta = {{"graph", name},
              {"nodes", std::to_string(res.node_count)},
              {"arcs", std::to_string(res.arc_count)},
              {"components", std::to_string(res.component_count)},
              {"trivial_components", std::to_string(res.trivial_count)}};
  for (const auto& r : res.records) rep.rows.push_back({name, r});
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-mean bounds on longest and shortest simple cycles"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string format = "csv";
  std::string out_path;
  bool ground_truth = false;
  bool timings = false;
  std::uint64_t max_cycles = cb::default_cycle_cap;
  std::optional<double> timeout;

  auto* analyze = app.add_subcommand("analyze", "per-component cycle means, bounds and estimates");
  analyze->add_option("graph", graph_path, "edge-list file")->required();
  analyze->add_flag("--ground-truth", ground_truth, "enumerate all simple cycles for comparison");
  analyze->add_option("--max-cycles", max_cycles, "enumeration cap per component");
  analyze->add_option("--timeout", timeout, "enumeration time budget per component, seconds");
  analyze->add_option("--format", format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "markdown", "json"}));
  analyze->add_flag("--timings", timings, "include stage timings (json only)");
  analyze->add_option("-o,--output", out_path, "write the report here instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "bounds and estimates in readable form");
  bounds->add_option("graph", graph_path, "edge-list file")->required();

  std::string dump_path;
  auto* enumerate = app.add_subcommand("enumerate", "count simple cycles and report the extremal ones");
  enumerate->add_option("graph", graph_path, "edge-list file")->required();
  enumerate->add_option("--max-cycles", max_cycles, "stop after this many cycles");
  enumerate->add_option("--dump", dump_path, "write every cycle to this file");

  std::string dist = "uniform";
  cb::Weight w_lo = 1;
  cb::Weight w_hi = 3000;
  std::uint64_t seed = 0;
  std::string in_path;
  auto* gen = app.add_subcommand("gen-weights", "replace arc weights with seeded random integers");
  gen->add_option("--dist", dist, "uniform or lognormal")->check(CLI::IsMember({"uniform", "lognormal", "log-normal"}));
  gen->add_option("--min", w_lo, "smallest weight");
  gen->add_option("--max", w_hi, "largest weight");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("in", in_path, "input topology")->required();
  gen->add_option("out", out_path, "output graph")->required();

  std::string dir;
  unsigned threads = 1;
  auto* bench = app.add_subcommand("bench", "reweight and analyze every .graph file of a directory");
  bench->add_option("dir", dir, "directory of topology files")->required();
  bench->add_option("--dist", dist, "uniform or lognormal")->check(CLI::IsMember({"uniform", "lognormal", "log-normal"}));
  bench->add_option("--min", w_lo, "smallest weight");
  bench->add_option("--max", w_hi, "largest weight");
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--max-cycles", max_cycles, "enumeration cap per component");
  bench->add_option("--timeout", timeout, "enumeration time budget per component, seconds");
  bench->add_option("--format", format, "csv, md or json")->check(CLI::IsMember({"csv", "md", "markdown", "json"}));
  bench->add_option("--threads", threads, "graphs analyzed in parallel");
  bench->add_flag("--timings", timings, "include stage timings (json only)");
  bench->add_option("-o,--output", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    cb::AnalyzeOptions opt;
    opt.ground_truth = ground_truth;
    opt.max_cycles = max_cycles;
    opt.timeout_seconds = timeout;

    if (*analyze) {
      const cb::AnalysisResult res = cb::analyze(load(graph_path), opt);
      emit(cb::emit_report(to_report(graph_path, res), cb::parse_report_format(format), {timings}), out_path);
    } else if (*bounds) {
      print_bounds(cb::analyze(load(graph_path), {}), std::cout);
    } else if (*enumerate) {
      const cb::WeightedDigraph g = load(graph_path);
      std::ofstream dump;
      if (!dump_path.empty()) {
        dump.open(dump_path, std::ios::binary);
        if (!dump) throw FatalError("cannot write " + dump_path);
      }
      std::optional<cb::ExtremalCycles> ex;
      try {
        if (dump.is_open()) {
          const auto r = cb::enumerate_simple_cycles(g, max_cycles, [&](std::span<const cb::ArcId> arcs) {
            dump << cb::cycle_dump_line(g, arcs) << "\n";
          });
          if (!dump) throw FatalError("cannot write " + dump_path);
          (void)r;
        }
        ex = cb::extremal_cycles(g, max_cycles);
      } catch (const cb::NoCycleError&) {
        std::cout << "cycles 0 (complete)\n";
        return 0;
      }
      std::cout << "cycles " << ex->total_cycle_count << (ex->complete ? " (complete)" : " (truncated)") << "\n";
      std::cout << "max-weight " << cb::cycle_dump_line(g, ex->max_weight.arcs) << "\n";
      std::cout << "max-length " << cb::cycle_dump_line(g, ex->max_length.arcs) << "\n";
      std::cout << "min-weight " << cb::cycle_dump_line(g, ex->min_weight.arcs) << "\n";
      std::cout << "min-length " << cb::cycle_dump_line(g, ex->min_length.arcs) << "\n";
    } else if (*gen) {
      cb::WeightSpec spec{cb::parse_distribution(dist), w_lo, w_hi, seed};
      try {
        cb::validate(spec);
      } catch (const std::invalid_argument& e) {
        throw FatalError(e.what());
      }
      write_file(out_path, cb::serialize_edge_list(cb::assign_weights(load(in_path), spec)));
    } else if (*bench) {
      cb::BenchOptions bo;
      bo.weights = {cb::parse_distribution(dist), w_lo, w_hi, seed};
      bo.analyze.max_cycles = max_cycles;
      bo.analyze.timeout_seconds = timeout;
      bo.threads = threads;
      try {
        cb::validate(bo.weights);
      } catch (const std::invalid_argument& e) {
        throw FatalError(e.what());
      }
      std::vector<cb::NamedGraph> graphs;
      try {
        graphs = cb::load_graph_dir(dir);
      } catch (const std::exception& e) {
        throw FatalError(e.what());
      }
      emit(cb::emit_report(cb::bench_graphs(graphs, bo), cb::parse_report_format(format), {timings}), out_path);
    }
  } catch (const FatalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
