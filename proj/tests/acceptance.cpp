// Acceptance suite: drives the generated-instance campaign and the fixtures,
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "theta6/instance_io.hpp"

using namespace theta6;

namespace {

struct Criterion {
  std::string title;
  bool pass = true;
  std::string detail;
  long checks = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::mutex agg_mutex;

int thread_count() {
  if (const char* env = std::getenv("THETA6_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

constexpr int kCampaignSize = 500;
constexpr int kOracleSeeds = 200;

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Criterion> criteria(9);
  criteria[1].title = "planarity of half-theta-6, G9, G6 over the campaign";
  criteria[2].title = "spanning ratio 2 and per-pair confined-path bound";
  criteria[3].title = "spanning ratio 3 for G9, 6-spanner chain for G9 and G6";
  criteria[4].title = "degree bounds c(v)+9 / c(v)+6 and charge lemma bounds";
  criteria[5].title = "subgraph chain and transformation traceability";
  criteria[6].title = "structural corollaries and single-use path edges";
  criteria[7].title = "oracle equivalence (brute half-theta-6, Floyd-Warshall stretch)";
  criteria[8].title = "fixtures: non-triangulation face and full G6 transformation";

  // ---- criteria 1..6: one shared campaign ------------------------------
  {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int idx = next.fetch_add(1); idx < kCampaignSize; idx = next.fetch_add(1)) {
        std::uint64_t seed = 1 + static_cast<std::uint64_t>(idx);
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull);
        int n = 3 + static_cast<int>(rng() % 58);              // n in [3, 60]
        int budget = static_cast<int>(rng() % (n + 1));        // up to n
        std::string tag = "seed " + std::to_string(seed) + " (n=" + std::to_string(n) +
                          ", budget=" + std::to_string(budget) + ")";
        VerificationReport report;
        try {
          InstanceFile f = generate_instance({seed, n, budget, 10000});
          GraphBundle bundle = build_bundle(f.instance);
          report = run_full_verification(bundle);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(agg_mutex);
          for (int c = 1; c <= 6; ++c) criteria[c].fail(tag + ": exception " + e.what());
          continue;
        }
        static const std::vector<std::pair<std::string, int>> mapping = {
            {"plane.theta6", 1},        {"plane.g9", 1},
            {"plane.g6", 1},            {"spanning.theta6_vs_vis", 2},
            {"theorem1.confined_path", 2}, {"theorem2.g9_paths", 3},
            {"spanning.g9_vs_vis", 3},  {"g6.spanning", 3},
            {"degree.g9", 4},           {"degree.g6", 4},
            {"charges.lemma_bounds", 4}, {"subgraph.chain", 5},
            {"structure.corollaries", 6}};
        std::lock_guard<std::mutex> lock(agg_mutex);
        for (const auto& [name, c] : mapping) {
          const CheckResult* res = report.find(name);
          if (!res) {
            criteria[c].fail(tag + ": check " + name + " missing");
            continue;
          }
          ++criteria[c].checks;
          if (!res->pass) criteria[c].fail(tag + ": " + name + ": " + res->witness);
        }
      }
    };
    std::vector<std::thread> pool;
    int jobs = thread_count();
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  double campaign_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // ---- criterion 7: oracle equivalence at small n, no constraints ------
  {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int idx = next.fetch_add(1); idx < kOracleSeeds; idx = next.fetch_add(1)) {
        std::uint64_t seed = 9000 + static_cast<std::uint64_t>(idx);
        std::mt19937_64 rng(seed);
        int n = 2 + static_cast<int>(rng() % 11);  // n in [2, 12]
        std::string tag = "seed " + std::to_string(seed) + " (n=" + std::to_string(n) + ")";
        try {
          InstanceFile f = generate_instance({seed, n, 0, 2000});
          GraphBundle b = build_bundle(f.instance);
          GeoGraph brute = oracle::brute_half_theta6(f.instance);
          std::lock_guard<std::mutex> lock(agg_mutex);
          ++criteria[7].checks;
          if (brute.edges != b.ht.graph.edges) {
            criteria[7].fail(tag + ": builder disagrees with the brute-force definition");
            continue;
          }
          for (const GeoGraph* h : {&b.ht.graph, &b.g9, &b.g6}) {
            double via_edges = spanning_ratio(*h, b.vis, f.instance);
            double via_pairs = oracle::all_pairs_stretch(*h, b.vis, f.instance);
            double scale = std::max({1.0, std::fabs(via_edges), std::fabs(via_pairs)});
            if (std::fabs(via_edges - via_pairs) > 1e-12 * scale)
              criteria[7].fail(tag + ": edge-restricted ratio deviates from all-pairs stretch");
          }
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(agg_mutex);
          criteria[7].fail(tag + ": exception " + e.what());
        }
      }
    };
    std::vector<std::thread> pool;
    int jobs = thread_count();
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // ---- criterion 8: fixtures -------------------------------------------
  try {
    InstanceFile fig1 = parse_instance_file(std::string(FIXTURES_DIR) + "/fig1.theta6");
    GraphBundle b = build_bundle(fig1.instance);
    ++criteria[8].checks;
    int sides = oracle::max_interior_face_sides(b.ht.graph, fig1.instance);
    if (sides < 4)
      criteria[8].fail("fig1: largest simple interior face has " + std::to_string(sides) +
                       " sides, expected >= 4");
    VerificationReport report = run_full_verification(b);
    if (!report.all_pass()) {
      for (const CheckResult& c : report.checks)
        if (!c.pass) criteria[8].fail("fig1: " + c.name + ": " + c.witness);
    }
  } catch (const std::exception& e) {
    criteria[8].fail(std::string("fig1: exception ") + e.what());
  }
  try {
    InstanceFile fig10 = parse_instance_file(std::string(FIXTURES_DIR) + "/fig10.theta6");
    GraphBundle b = build_bundle(fig10.instance);
    ++criteria[8].checks;
    bool full_step = false;
    for (const TransformationStep& step : b.steps) {
      if (!step.removed_type2) continue;
      full_step = true;
      if (!(b.g6.degrees()[step.center] < b.g9.degrees()[step.center]))
        criteria[8].fail("fig10: degree did not strictly drop at the transformed center");
    }
    if (!full_step) criteria[8].fail("fig10: no transformation with a type-2 removal fired");
    VerificationReport report = run_full_verification(b);
    if (!report.all_pass()) {
      for (const CheckResult& c : report.checks)
        if (!c.pass) criteria[8].fail("fig10: " + c.name + ": " + c.witness);
    }
  } catch (const std::exception& e) {
    criteria[8].fail(std::string("fig10: exception ") + e.what());
  }

  // ---- report ------------------------------------------------------------
  bool all = true;
  for (int c = 1; c <= 8; ++c) {
    const Criterion& crit = criteria[c];
    all = all && crit.pass;
    std::printf("criterion %d (%s): %s (%ld checks)%s%s\n", c, crit.title.c_str(),
                crit.pass ? "PASS" : "FAIL", crit.checks, crit.detail.empty() ? "" : " -- ",
                crit.detail.c_str());
  }
  std::printf("campaign: %d instances in %.1fs (%d threads)\n", kCampaignSize, campaign_s,
              thread_count());
  return all ? 0 : 1;
}
