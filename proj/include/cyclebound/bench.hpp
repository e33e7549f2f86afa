#ifndef CYCLEBOUND_BENCH_HPP
#define CYCLEBOUND_BENCH_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclebound/digraph.hpp"
#include "cyclebound/harness.hpp"
#include "cyclebound/report.hpp"
#include "cyclebound/weightgen.hpp"

namespace cyclebound {

struct BenchOptions {
  WeightSpec weights;  // seed is the base seed; each graph derives its own
  AnalyzeOptions analyze = [] {
    AnalyzeOptions a;
    a.ground_truth = true;
    return a;
  }();
  unsigned threads = 1;
};

struct NamedGraph {
  std::string name;
  WeightedDigraph topology;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed used for one graph of a bench run; depends on its name only, so
/// adding files to a directory leaves the others unchanged.
inline std::uint64_t graph_seed(std::uint64_t base, std::string_view name) { return splitmix64(base ^ fnv1a(name)); }

inline std::vector<std::pair<std::string, std::string>> bench_metadata(const BenchOptions& opt) {
  return {{"generator", weight_generator_name},
          {"seed", std::to_string(opt.weights.seed)},
          {"seed_derivation", "splitmix64(seed ^ fnv1a(name))"},
          {"dist", to_string(opt.weights.distribution)},
          {"w_lo", std::to_string(opt.weights.lo)},
          {"w_hi", std::to_string(opt.weights.hi)},
          {"rounding", opt.weights.distribution == WeightDistribution::lognormal ? "nearest, clamped to [w_lo,w_hi]"
                                                                                  : "none"},
          {"eps_reference", "lambda_lw/lambda_ll columns: true cycle mean; lmax columns: lambda_max"},
          {"max_cycles", std::to_string(opt.analyze.max_cycles)}};
}

/// Reweights every topology with its derived seed and analyzes it. Rows come
/// out in input order, whatever the thread count.
inline Report bench_graphs(const std::vector<NamedGraph>& graphs, const BenchOptions& opt) {
  validate(opt.weights);
  std::vector<std::vector<ReportRow>> per_graph(graphs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      WeightSpec spec = opt.weights;
      spec.seed = graph_seed(opt.weights.seed, graphs[i].name);
      const AnalysisResult res = analyze(assign_weights(graphs[i].topology, spec), opt.analyze);
      for (const ComponentRecord& r : res.records) per_graph[i].push_back({graphs[i].name, r});
    }
  };
  const unsigned t = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(graphs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  Report rep;
  rep.meta = bench_metadata(opt);
  for (auto& rows : per_graph) {
    for (auto& r : rows) rep.rows.push_back(std::move(r));
  }
  return rep;
}

inline WeightedDigraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_edge_list(in);
}

/// All regular files in `dir` with extension .graph, sorted by file name.
inline std::vector<NamedGraph> load_graph_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".graph") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
  std::vector<NamedGraph> graphs;
  for (const auto& f : files) graphs.push_back({f.filename().string(), read_graph_file(f)});
  return graphs;
}

inline Report run_bench(const std::filesystem::path& dir, const BenchOptions& opt) {
  return bench_graphs(load_graph_dir(dir), opt);
}

}  // namespace cyclebound

#endif  // CYCLEBOUND_BENCH_HPP
