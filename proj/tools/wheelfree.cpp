// Command-line front end. Exit codes: 0 success, 2 parse error, 3 invalid
// input (class violation), 4 internal error, 5 invalid argument or size
// limit, CLI11 codes for usage errors.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "wheelfree/io.hpp"
#include "wheelfree/solver.hpp"
#include "wheelfree/testkit.hpp"

namespace fs = std::filesystem;
using namespace wheelfree;
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitInternal = 4;
constexpr int kExitInvalidArgument = 5;
constexpr int kSchemaVersion = 1;

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

std::map<std::string, int> class_histogram(const DecompositionTrace& trace) {
  std::map<std::string, int> h;
  for (const auto& s : trace.steps) ++h[to_string(s.a_class)];
  ++h[to_string(trace.terminal_class)];
  return h;
}

int cmd_solve(const std::string& input, bool extract, const std::string& trace_path, bool as_json) {
  WeightedTrigraph wt = read_instance_file(input);
  if (extract && !wt.g.is_graph()) throw InvalidArgument("--extract needs an input without semi pairs");
  auto t0 = std::chrono::steady_clock::now();
  SolveResult res = alpha(wt);
  std::optional<ExtractionResult> ext;
  if (extract) ext = max_stable_set_graph(wt);
  double elapsed = ms_since(t0);
  if (!trace_path.empty()) write_text(trace_path, trace_to_json(res.trace) + "\n");
  if (as_json) {
    json doc;
    doc["version"] = kSchemaVersion;
    doc["alpha"] = res.alpha;
    doc["elapsed_ms"] = elapsed;
    doc["recursion_steps"] = res.steps;
    doc["basic_class_histogram"] = class_histogram(res.trace);
    if (ext) doc["stable_set"] = ext->stable_set;
    if (!trace_path.empty()) doc["trace_path"] = trace_path;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "alpha " << res.alpha << "\n";
    if (ext) {
      std::cout << "stable_set";
      for (Vertex v : ext->stable_set) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& dot_path) {
  WeightedTrigraph wt = read_instance_file(input);
  DecompositionTrace trace = decompose(wt.g);
  std::cout << trace_to_json(trace) << "\n";
  if (dot_path == "-") std::cout << trace_to_dot(trace);
  else if (!dot_path.empty()) write_text(dot_path, trace_to_dot(trace));
  return 0;
}

InstanceClass parse_class(const std::string& name) {
  static const std::map<std::string, InstanceClass> names{
      {"series-parallel", InstanceClass::SeriesParallel}, {"complete-bipartite", InstanceClass::CompleteBipartite},
      {"line", InstanceClass::Line},                      {"glued-clique", InstanceClass::GluedClique},
      {"glued-stable", InstanceClass::GluedStable}};
  auto it = names.find(name);
  if (it == names.end()) throw InvalidArgument("unknown class " + name);
  return it->second;
}

struct GenOptions {
  std::uint64_t seed = 1;
  int count = 1;
  int n_min = 4;
  int n_max = 12;
  Weight weight_max = 20;
  int semi_percent = 30;
  std::string cls = "mix";
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  GeneratorConfig c;
  c.seed = o.seed;
  c.n_min = o.n_min;
  c.n_max = o.n_max;
  c.weight_max = o.weight_max;
  c.semi_percent = o.semi_percent;
  if (o.cls != "mix") {
    c.class_mix = {0, 0, 0, 0, 0};
    c.class_mix[static_cast<int>(parse_class(o.cls))] = 1;
  }
  InstanceGenerator gen(c);
  if (o.out.empty()) {
    for (int i = 0; i < o.count; ++i) {
      GeneratedInstance inst = gen.next();
      std::cout << "# " << to_string(inst.cls) << "\n" << write_instance(inst.wt);
    }
    return 0;
  }
  fs::create_directories(o.out);
  json manifest;
  manifest["version"] = kSchemaVersion;
  manifest["seed"] = o.seed;
  manifest["class"] = o.cls;
  manifest["n_min"] = o.n_min;
  manifest["n_max"] = o.n_max;
  manifest["weight_max"] = o.weight_max;
  manifest["semi_percent"] = o.semi_percent;
  json files = json::array();
  for (int i = 0; i < o.count; ++i) {
    GeneratedInstance inst = gen.next();
    char name[32];
    std::snprintf(name, sizeof name, "inst_%05d.tg", i);
    write_instance_file(inst.wt, (fs::path(o.out) / name).string());
    files.push_back({{"file", name}, {"class", to_string(inst.cls)}, {"n", inst.wt.size()}});
  }
  manifest["instances"] = std::move(files);
  write_text((fs::path(o.out) / "manifest.json").string(), manifest.dump(2) + "\n");
  return 0;
}

int cmd_validate(const std::string& input) {
  WeightedTrigraph wt = read_instance_file(input);
  if (ValidationReport rep = validate(wt); !rep.ok) {
    std::cout << "invalid weights: " << rep.message << "\n";
    return kExitInvalidInput;
  }
  if (wt.size() > 16) throw SizeLimitExceeded("validate handles at most 16 vertices; this input has " +
                                              std::to_string(wt.size()));
  if (is_isk4_wheel_free(wt.g)) {
    std::cout << "isk4-wheel-free\n";
    return 0;
  }
  std::cout << "not isk4-wheel-free\n";
  return kExitInvalidInput;
}

int cmd_oracle(const std::string& input, int max_n) {
  WeightedTrigraph wt = read_instance_file(input);
  std::cout << "alpha " << brute_alpha(wt, max_n) << "\n";
  return 0;
}

struct BenchOptions {
  std::string corpus;
  std::vector<int> sizes;
  int per_size = 3;
  std::uint64_t seed = 1;
  int workers = 1;
  bool as_json = false;
};

int cmd_bench(const BenchOptions& o) {
  std::vector<std::pair<std::string, WeightedTrigraph>> items;
  if (!o.corpus.empty()) {
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(o.corpus))
      if (e.is_regular_file() && e.path().extension() == ".tg") paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) items.emplace_back(p.filename().string(), read_instance_file(p.string()));
  } else {
    GeneratorConfig c;
    c.seed = o.seed;
    InstanceGenerator gen(c);
    for (int n : o.sizes)
      for (int i = 0; i < o.per_size; ++i) {
        InstanceClass cls = i % 2 ? InstanceClass::GluedStable : InstanceClass::GluedClique;
        items.emplace_back("generated-" + std::to_string(n) + "-" + std::to_string(i), gen.next(cls, n).wt);
      }
  }
  if (items.empty()) throw InvalidArgument("nothing to benchmark");

  std::vector<double> ms(items.size());
  std::vector<Weight> alphas(items.size());
  std::vector<std::string> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < items.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        alphas[i] = alpha(items[i].second, {false}).alpha;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
      ms[i] = ms_since(t0);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, o.workers); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!errors[i].empty()) throw InvalidInput(items[i].first + ": " + errors[i]);

  std::map<int, std::vector<double>> by_size;
  for (std::size_t i = 0; i < items.size(); ++i) by_size[items[i].second.size()].push_back(ms[i]);
  std::vector<std::pair<int, double>> medians;
  for (auto& [n, v] : by_size) {
    std::sort(v.begin(), v.end());
    double med = v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
    medians.emplace_back(n, med);
  }
  // Least-squares slope of log(median) against log(n).
  std::optional<double> slope;
  if (medians.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(medians.size());
    for (auto [n, m] : medians) {
      double x = std::log(n), y = std::log(std::max(m, 1e-3));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double den = k * sxx - sx * sx;
    if (den > 0) slope = (k * sxy - sx * sy) / den;
  }
  if (o.as_json) {
    json doc;
    doc["version"] = kSchemaVersion;
    json rows = json::array();
    for (std::size_t i = 0; i < items.size(); ++i)
      rows.push_back({{"name", items[i].first}, {"n", items[i].second.size()}, {"alpha", alphas[i]}, {"ms", ms[i]}});
    doc["instances"] = std::move(rows);
    json med = json::array();
    for (auto [n, m] : medians) med.push_back({{"n", n}, {"median_ms", m}, {"count", by_size[n].size()}});
    doc["medians"] = std::move(med);
    if (slope) doc["loglog_slope"] = *slope;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n\tcount\tmedian_ms\n";
    for (auto [n, m] : medians) std::cout << n << "\t" << by_size[n].size() << "\t" << m << "\n";
    if (slope) std::cout << "loglog_slope " << *slope << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum weight stable set for {ISK4, wheel}-free trigraphs"};
  app.require_subcommand(1);

  std::string input, trace_path, dot_path;
  bool extract = false, as_json = false;
  auto* solve = app.add_subcommand("solve", "compute alpha of a weighted trigraph");
  solve->add_option("input", input, "instance file")->required();
  solve->add_flag("--extract", extract, "also print a maximum weight stable set (graphs only)");
  solve->add_option("--trace", trace_path, "write the decomposition trace as JSON to this path");
  solve->add_flag("--json", as_json, "print a machine-readable report");

  auto* decomp = app.add_subcommand("decompose", "run the extreme decomposition and print its trace");
  decomp->add_option("input", input, "instance file")->required();
  decomp->add_option("--dot", dot_path, "write the block tree in dot format to this path ('-' for stdout)");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("--seed", gen_opts.seed, "generator seed");
  gen->add_option("--count", gen_opts.count, "number of instances")->check(CLI::NonNegativeNumber);
  gen->add_option("--n-min", gen_opts.n_min, "smallest size");
  gen->add_option("--n-max", gen_opts.n_max, "largest size");
  gen->add_option("--weight-max", gen_opts.weight_max, "largest weight");
  gen->add_option("--semi-percent", gen_opts.semi_percent, "chance that an eligible edge becomes semi")
      ->check(CLI::Range(0, 100));
  gen->add_option("--class", gen_opts.cls,
                  "mix, series-parallel, complete-bipartite, line, glued-clique or glued-stable");
  gen->add_option("--out", gen_opts.out, "output directory (stdout when omitted)");

  auto* val = app.add_subcommand("validate", "brute-force check for ISK4 and wheels (n <= 16)");
  val->add_option("input", input, "instance file")->required();

  int oracle_max_n = 24;
  auto* oracle = app.add_subcommand("oracle", "alpha by exhaustive enumeration");
  oracle->add_option("input", input, "instance file")->required();
  oracle->add_option("--max-n", oracle_max_n, "refuse larger inputs")->check(CLI::Range(0, 31));

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "median solve time per size and log-log slope");
  bench->add_option("corpus", bench_opts.corpus, "directory of .tg files");
  bench->add_option("--sizes", bench_opts.sizes, "generate glued instances of these sizes instead")->delimiter(',');
  bench->add_option("--per-size", bench_opts.per_size, "generated instances per size");
  bench->add_option("--seed", bench_opts.seed, "generator seed");
  bench->add_option("--workers", bench_opts.workers, "parallel workers");
  bench->add_flag("--json", bench_opts.as_json, "print a machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(input, extract, trace_path, as_json);
    if (*decomp) return cmd_decompose(input, dot_path);
    if (*gen) return cmd_gen(gen_opts);
    if (*val) return cmd_validate(input);
    if (*oracle) return cmd_oracle(input, oracle_max_n);
    if (*bench) {
      if (bench_opts.corpus.empty() && bench_opts.sizes.empty())
        throw InvalidArgument("bench needs a corpus directory or --sizes");
      return cmd_bench(bench_opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitInvalidArgument;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
