// Command line front end: generate instances, build the graph family, run
// the verification suite, render SVG, and drive seeded campaigns.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "theta6/instance_io.hpp"

namespace {

using namespace theta6;

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("THETA6_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw IoError("cannot write " + path);
  return file;
}

const GeoGraph* graph_by_name(const GraphBundle& b, const std::string& name) {
  if (name == "vis") return &b.vis;
  if (name == "theta6") return &b.ht.graph;
  if (name == "g9") return &b.g9;
  if (name == "g6") return &b.g6;
  return nullptr;
}

int cmd_gen(const GenParams& params, const std::string& out_path) {
  InstanceFile file = generate_instance(params);
  std::ofstream out_file;
  open_or_stdout(out_file, out_path) << serialize_instance(file);
  return 0;
}

int cmd_build(const std::string& in_path, const std::string& graph, const std::string& out_path) {
  InstanceFile file = parse_instance_file(in_path);
  GraphBundle bundle = build_bundle(file.instance);
  const GeoGraph* g = graph_by_name(bundle, graph);
  if (!g) {
    std::cerr << "unknown graph '" << graph << "' (expected vis|theta6|g9|g6)\n";
    return 2;
  }
  std::ofstream out_file;
  std::ostream& out = open_or_stdout(out_file, out_path);
  for (const auto& [u, v] : g->edges) out << u << " " << v << "\n";
  return 0;
}

int cmd_verify(const std::string& in_path, const std::string& json_path, bool quiet) {
  InstanceFile file = parse_instance_file(in_path);
  auto start = std::chrono::steady_clock::now();
  GraphBundle bundle = build_bundle(file.instance);
  VerificationReport report = run_full_verification(bundle);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!quiet) std::cout << report.to_text();
  if (!json_path.empty()) {
    std::ofstream out_file;
    open_or_stdout(out_file, json_path) << make_run_report(bundle, report, ms).dump() << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_svg(const std::string& in_path, const std::string& out_path,
            const std::vector<std::string>& layer_names) {
  InstanceFile file = parse_instance_file(in_path);
  GraphBundle bundle = build_bundle(file.instance);
  std::vector<SvgLayer> layers;
  for (const std::string& name : layer_names) {
    const GeoGraph* g = graph_by_name(bundle, name);
    if (!g) {
      std::cerr << "unknown layer '" << name << "' (expected vis|theta6|g9|g6)\n";
      return 2;
    }
    layers.push_back({name, g});
  }
  render_svg_file(file.instance, layers, out_path);
  return 0;
}

struct CampaignParams {
  int count = 500;
  std::uint64_t seed0 = 1;
  int n_min = 3;
  int n_max = 60;
  long bbox = 10000;
  int jobs = 0;
  std::string out_path;
};

int cmd_campaign(const CampaignParams& params) {
  std::vector<std::string> lines(params.count);
  std::atomic<int> next{0};
  std::atomic<int> failures{0};
  auto worker = [&]() {
    for (int idx = next.fetch_add(1); idx < params.count; idx = next.fetch_add(1)) {
      std::uint64_t seed = params.seed0 + static_cast<std::uint64_t>(idx);
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
      int span = params.n_max - params.n_min + 1;
      int n = params.n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
      int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
      GenParams gp{seed, n, budget, params.bbox};
      auto start = std::chrono::steady_clock::now();
      nlohmann::json record;
      try {
        InstanceFile file = generate_instance(gp);
        GraphBundle bundle = build_bundle(file.instance);
        VerificationReport report = run_full_verification(bundle);
        double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        record = make_run_report(bundle, report, ms);
        record["seed"] = seed;
        if (!report.all_pass()) failures.fetch_add(1);
      } catch (const std::exception& e) {
        record = {{"schema", "theta6-run v1"}, {"seed", seed}, {"all_pass", false}, {"error", e.what()}};
        failures.fetch_add(1);
      }
      lines[idx] = record.dump();
    }
  };
  int jobs = thread_count(params.jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ofstream out_file;
  std::ostream& out = open_or_stdout(out_file, params.out_path);
  for (const std::string& line : lines) out << line << "\n";
  nlohmann::json aggregate{{"schema", "theta6-campaign v1"},
                           {"instances", params.count},
                           {"failures", failures.load()}};
  out << aggregate.dump() << "\n";
  std::cerr << "campaign: " << params.count - failures.load() << "/" << params.count
            << " instances verified clean\n";
  return failures.load() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained half-theta-6 spanner toolkit"};
  app.require_subcommand(1);

  GenParams gen_params;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a random general-position instance");
  gen->add_option("--seed", gen_params.seed, "RNG seed")->capture_default_str();
  gen->add_option("--n", gen_params.n, "number of points")->capture_default_str();
  gen->add_option("--constraints", gen_params.constraint_budget, "constraint budget")
      ->capture_default_str();
  gen->add_option("--bbox", gen_params.bbox, "coordinate range [0,bbox]")->capture_default_str();
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  std::string build_in, build_graph = "theta6", build_out;
  auto* build = app.add_subcommand("build", "build a graph and emit its edge list");
  build->add_option("--in,-i", build_in, "instance file")->required();
  build->add_option("--graph,-g", build_graph, "vis|theta6|g9|g6")->capture_default_str();
  build->add_option("--out,-o", build_out, "output file (default stdout)");

  std::string verify_in, verify_json;
  bool verify_quiet = false;
  auto* verify = app.add_subcommand("verify", "run the full check suite on an instance");
  verify->add_option("--in,-i", verify_in, "instance file")->required();
  verify->add_option("--json", verify_json, "write the machine-readable run report here");
  verify->add_flag("--quiet,-q", verify_quiet, "suppress the text report");

  std::string svg_in, svg_out;
  std::vector<std::string> svg_layers{"theta6"};
  auto* svg = app.add_subcommand("svg", "render an instance and selected graph layers");
  svg->add_option("--in,-i", svg_in, "instance file")->required();
  svg->add_option("--out,-o", svg_out, "output SVG file")->required();
  svg->add_option("--layers,-l", svg_layers, "layers to draw (vis theta6 g9 g6)")
      ->capture_default_str();

  CampaignParams camp;
  auto* campaign = app.add_subcommand("campaign", "verify a batch of seeded random instances");
  campaign->add_option("--count,-c", camp.count, "number of instances")->capture_default_str();
  campaign->add_option("--seed0", camp.seed0, "first seed")->capture_default_str();
  campaign->add_option("--n-min", camp.n_min, "smallest instance")->capture_default_str();
  campaign->add_option("--n-max", camp.n_max, "largest instance")->capture_default_str();
  campaign->add_option("--bbox", camp.bbox, "coordinate range")->capture_default_str();
  campaign->add_option("--jobs,-j", camp.jobs, "worker threads (0 = auto)")->capture_default_str();
  campaign->add_option("--out,-o", camp.out_path, "report stream (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_params, gen_out);
    if (build->parsed()) return cmd_build(build_in, build_graph, build_out);
    if (verify->parsed()) return cmd_verify(verify_in, verify_json, verify_quiet);
    if (svg->parsed()) return cmd_svg(svg_in, svg_out, svg_layers);
    if (campaign->parsed()) return cmd_campaign(camp);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
