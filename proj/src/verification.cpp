#include "theta6/verification.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <sstream>

#include "theta6/errors.hpp"

namespace theta6 {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct WeightedGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;

  WeightedGraph(const GeoGraph& g, const Instance& inst) : adj(g.vertex_count) {
    for (const auto& [u, v] : g.edges) {
      double w = euclid_length_approx(inst.points[u], inst.points[v]);
      adj[u].push_back({v, w});
      adj[v].push_back({u, w});
    }
  }
};

std::vector<double> dijkstra(const WeightedGraph& g, int source) {
  std::vector<double> dist(g.adj.size(), kInf);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (auto [v, w] : g.adj[u])
      if (d + w < dist[v]) {
        dist[v] = d + w;
        pq.push({d + w, v});
      }
  }
  return dist;
}

std::string edge_str(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << "check=" << c.name << " status=" << (c.pass ? "pass" : "FAIL") << " value=" << c.value;
    if (!c.witness.empty()) out << " witness=\"" << c.witness << "\"";
    out << " ms=" << c.millis << "\n";
  }
  return out.str();
}

CheckResult check_plane(const GeoGraph& g, const Instance& inst) {
  auto start = Clock::now();
  CheckResult res{"plane"};
  for (size_t a = 0; a < g.edges.size() && res.pass; ++a)
    for (size_t b = a + 1; b < g.edges.size(); ++b) {
      const auto& [p, q] = g.edges[a];
      const auto& [r, s] = g.edges[b];
      if (properly_intersect({inst.points[p], inst.points[q]}, {inst.points[r], inst.points[s]})) {
        res.pass = false;
        res.witness = "edges " + edge_str(p, q) + " and " + edge_str(r, s) + " cross";
        break;
      }
    }
  res.millis = ms_since(start);
  return res;
}

std::vector<double> shortest_path_lengths(const GeoGraph& g, const Instance& inst, int source) {
  return dijkstra(WeightedGraph(g, inst), source);
}

double spanning_ratio(const GeoGraph& h, const GeoGraph& base, const Instance& inst) {
  if (!h.is_subgraph_of(base))
    throw NotSubgraph("spanning_ratio: h is not a subgraph of the base graph");
  WeightedGraph wh(h, inst);
  auto base_adj = base.adjacency();
  double worst = 0.0;
  bool any = false;
  for (int u = 0; u < base.vertex_count; ++u) {
    if (base_adj[u].empty()) continue;
    std::vector<double> dist = dijkstra(wh, u);
    for (int v : base_adj[u]) {
      if (v < u) continue;
      any = true;
      double direct = euclid_length_approx(inst.points[u], inst.points[v]);
      double ratio = direct == 0 ? 1.0 : dist[v] / direct;
      worst = std::max(worst, ratio);
    }
  }
  return any ? worst : 1.0;
}

CheckResult check_theorem1(const Instance& inst, const HalfThetaGraph& ht) {
  auto start = Clock::now();
  CheckResult res{"theorem1.confined_path"};
  const int n = inst.n();
  std::vector<char> inside(n);
  auto adj = ht.graph.adjacency();
  for (int u = 0; u < n && res.pass; ++u) {
    for (int w = 0; w < n; ++w) {
      if (w == u) continue;
      auto sector = maybe_sector(inst.points[w] - inst.points[u]);
      if (!sector || ConeRef::from_sector(*sector).polarity != Polarity::Positive) continue;
      if (!can_see(inst, u, w)) continue;
      CanonicalTriangle tri = canonical_triangle(inst, u, w);
      for (int p = 0; p < n; ++p) inside[p] = contains_point(tri, inst.points[p]);
      // Dijkstra on the induced subgraph, no detour through outside vertices
      std::vector<double> dist(n, kInf);
      std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                          std::greater<>>
          pq;
      dist[u] = 0;
      pq.push({0, u});
      while (!pq.empty()) {
        auto [d, a] = pq.top();
        pq.pop();
        if (d > dist[a]) continue;
        for (int b : adj[a]) {
          if (!inside[b]) continue;
          double nd = d + euclid_length_approx(inst.points[a], inst.points[b]);
          if (nd < dist[b]) {
            dist[b] = nd;
            pq.push({nd, b});
          }
        }
      }
      double len = euclid_length_approx(inst.points[u], inst.points[w]);
      double bound = theorem1_factor(tri.alpha) * len + kRatioTolerance * len;
      res.value = std::max(res.value, len == 0 ? 0 : dist[w] / len);
      if (dist[w] > bound) {
        res.pass = false;
        res.witness = "pair " + edge_str(u, w) + ": confined path " + std::to_string(dist[w]) +
                      " exceeds bound " + std::to_string(bound);
        break;
      }
    }
  }
  res.millis = ms_since(start);
  return res;
}

namespace {

// Angle between uw and a boundary ray of the negative cone containing w,
// exact tangent evaluated in doubles afterwards.
double angle_from_ray(const Instance& inst, int u, int w, int ray) {
  Vec2<Scalar> d = inst.points[w] - inst.points[u];
  ExtPoint de = {ExtScalar(d.x), ExtScalar(d.y)};
  ExtPoint r = ray_direction(ray);
  ExtScalar denom = dot(r, de);
  if (sign_of(denom) <= 0) return -1;  // ambiguous geometry, caller falls back
  ExtScalar tan = abs(cross(r, de)) / denom;
  return std::atan(tan.to_double());
}

}  // namespace

CheckResult check_theorem2(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                           const std::vector<CanonicalPathRecord>& records) {
  auto start = Clock::now();
  CheckResult res{"theorem2.g9_paths"};
  WeightedGraph wg9(g9, inst);
  std::vector<std::vector<double>> dist(inst.n());
  auto dist_from = [&](int u) -> const std::vector<double>& {
    if (dist[u].empty()) dist[u] = dijkstra(wg9, u);
    return dist[u];
  };
  for (const auto& [a, b] : ht.graph.edges) {
    // orient so that w lies in a negative cone of u
    int u = a, w = b;
    if (cone_of(inst, a, b).polarity == Polarity::Positive) std::swap(u, w);
    ConeRef cone = cone_of(inst, u, w);
    double len = euclid_length_approx(inst.points[u], inst.points[w]);
    double d = dist_from(u)[w];
    res.value = std::max(res.value, len == 0 ? 0 : d / len);
    if (d > 3 * len + kRatioTolerance * len) {
      res.pass = false;
      res.witness = "edge " + edge_str(u, w) + ": d_G9 " + std::to_string(d) + " exceeds 3|uw| " +
                    std::to_string(3 * len);
      break;
    }
    // refined per-record bound
    int k = cone.sector();
    for (const CanonicalPathRecord& rec : records) {
      if (rec.source != u || rec.subcone.cone != cone) continue;
      auto it = std::find(rec.sequence.begin(), rec.sequence.end(), w);
      if (it == rec.sequence.end()) continue;
      int p = static_cast<int>(it - rec.sequence.begin());
      // w on the ccw side of the closest vertex: measure from the cw ray
      double alpha = angle_from_ray(inst, u, w, p >= rec.closest_index ? k : k + 1);
      if (alpha < 0) continue;  // fall back to the factor-3 check above
      double bound = theorem2_factor(alpha) * len + kRatioTolerance * len;
      if (d > bound) {
        res.pass = false;
        res.witness = "edge " + edge_str(u, w) + ": d_G9 " + std::to_string(d) +
                      " exceeds refined bound " + std::to_string(bound);
        break;
      }
    }
    if (!res.pass) break;
  }
  if (res.pass) {
    double ratio = spanning_ratio(g9, ht.graph, inst);
    if (ratio > 3 + kRatioTolerance) {
      res.pass = false;
      res.witness = "global ratio of G9 vs half-theta-6 is " + std::to_string(ratio);
    }
  }
  res.millis = ms_since(start);
  return res;
}

CheckResult check_g6_spanning(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g6,
                              const GeoGraph& vis) {
  auto start = Clock::now();
  CheckResult res{"g6.spanning"};
  WeightedGraph wg6(g6, inst);
  std::vector<std::vector<double>> dist(inst.n());
  auto dist_from = [&](int u) -> const std::vector<double>& {
    if (dist[u].empty()) dist[u] = dijkstra(wg6, u);
    return dist[u];
  };
  for (const auto& [u, w] : ht.graph.edges) {
    double len = euclid_length_approx(inst.points[u], inst.points[w]);
    double d = dist_from(u)[w];
    res.value = std::max(res.value, len == 0 ? 0 : d / len);
    if (d > 3 * len + kRatioTolerance * len) {
      res.pass = false;
      res.witness = "edge " + edge_str(u, w) + ": d_G6 " + std::to_string(d) + " exceeds 3|uw| " +
                    std::to_string(3 * len);
      break;
    }
  }
  if (res.pass) {
    double ratio = spanning_ratio(g6, vis, inst);
    if (ratio > 6 + kRatioTolerance) {
      res.pass = false;
      res.witness = "global ratio of G6 vs Vis is " + std::to_string(ratio);
    }
  }
  res.millis = ms_since(start);
  return res;
}

CheckResult check_degree_bounds(const Instance& inst, const GeoGraph& g, int slack) {
  auto start = Clock::now();
  CheckResult res{"degree.c_plus_" + std::to_string(slack)};
  std::vector<int> deg = g.degrees();
  double worst = -kInf;
  for (int v = 0; v < inst.n(); ++v) {
    int c = inst.c_of(v);
    worst = std::max(worst, double(deg[v] - c));
    if (deg[v] > c + slack) {
      res.pass = false;
      res.witness = "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                    " > c(v)+" + std::to_string(slack) + " = " + std::to_string(c + slack);
      break;
    }
  }
  res.value = inst.n() ? worst : 0;
  res.millis = ms_since(start);
  return res;
}

CheckResult check_charges(const Instance& inst, const ChargeLedger& ledger, const GeoGraph& g9) {
  auto start = Clock::now();
  CheckResult res{"charges.lemma_bounds"};
  std::vector<int> deg = g9.degrees();
  for (int v = 0; v < inst.n() && res.pass; ++v) {
    for (int i = 0; i < 3; ++i) {
      ConeRef pos = ConeRef::positive(i);
      ConeRef neg = ConeRef::negative(i);
      int cpos = ledger.constraints_in(v, pos);
      int cneg = ledger.constraints_in(v, neg);
      if (ledger.charge_of(v, pos) > std::max(2, cpos + 1)) {
        res.pass = false;
        res.witness = "positive cone " + to_string(pos) + " of vertex " + std::to_string(v) +
                      " charged " + std::to_string(ledger.charge_of(v, pos));
        break;
      }
      if (ledger.charge_of(v, neg) > cneg + 1) {
        res.pass = false;
        res.witness = "negative cone " + to_string(neg) + " of vertex " + std::to_string(v) +
                      " charged " + std::to_string(ledger.charge_of(v, neg));
        break;
      }
    }
    if (res.pass && ledger.total(v) < deg[v]) {
      res.pass = false;
      res.witness = "vertex " + std::to_string(v) + " total charge " +
                    std::to_string(ledger.total(v)) + " below its G9 degree " +
                    std::to_string(deg[v]);
    }
  }
  res.millis = ms_since(start);
  return res;
}

CheckResult check_structure(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                            const std::vector<CanonicalPathRecord>& records, const GeoGraph& vis) {
  auto start = Clock::now();
  CheckResult res{"structure.corollaries"};
  auto fail = [&](std::string why) {
    res.pass = false;
    res.witness = std::move(why);
  };
  if (!g9.is_subgraph_of(ht.graph)) fail("G9 is not a subgraph of the half-theta-6 graph");
  if (res.pass && !ht.graph.is_subgraph_of(vis)) fail("half-theta-6 is not a subgraph of Vis");
  std::map<Edge, int> path_uses;
  for (const CanonicalPathRecord& rec : records) {
    if (!res.pass) break;
    int i = rec.subcone.cone.index;
    int u = rec.source;
    for (size_t k = 1; k < rec.sequence.size(); ++k) {
      int a = rec.sequence[k - 1];
      int b = rec.sequence[k];
      ++path_uses[make_edge(a, b)];
      // consecutive vertices avoid each other's index-i cones
      if (cone_of(inst, a, b).index == i || cone_of(inst, b, a).index == i) {
        fail("path edge " + edge_str(a, b) + " of record " + to_string(rec.subcone) +
             " lies in an index-" + std::to_string(i) + " cone");
        break;
      }
      // triangle (source, a, b) is empty and free of constraints
      const Point& pu = inst.points[u];
      const Point& pa = inst.points[a];
      const Point& pb = inst.points[b];
      for (int z = 0; z < inst.n(); ++z) {
        if (z == u || z == a || z == b) continue;
        if (strictly_inside_triangle(pu, pa, pb, inst.points[z])) {
          fail("vertex " + std::to_string(z) + " inside canonical-path triangle " +
               std::to_string(u) + "," + std::to_string(a) + "," + std::to_string(b));
          break;
        }
      }
      if (!res.pass) break;
      for (const auto& [cp, cq] : inst.constraints) {
        bool ends_inside = strictly_inside_triangle(pu, pa, pb, inst.points[cp]) ||
                           strictly_inside_triangle(pu, pa, pb, inst.points[cq]);
        Segment c{inst.points[cp], inst.points[cq]};
        bool crosses = properly_intersect(c, {pu, pa}) || properly_intersect(c, {pa, pb}) ||
                       properly_intersect(c, {pb, pu});
        if (ends_inside || crosses) {
          fail("constraint " + edge_str(cp, cq) + " meets canonical-path triangle " +
               std::to_string(u) + "," + std::to_string(a) + "," + std::to_string(b));
          break;
        }
      }
      if (!res.pass) break;
    }
  }
  if (res.pass) {
    // a path edge whose far endpoint is not a closest canonical vertex
    // belongs to at most one canonical path
    for (const auto& [edge, uses] : path_uses) {
      auto [p, q] = edge;
      int v = p, x = q;
      if (cone_of(inst, p, q).polarity == Polarity::Positive) std::swap(v, x);
      if (!is_closest_canonical(inst, records, v, cone_of(inst, v, x), x) && uses > 1) {
        fail("edge " + edge_str(v, x) + " used by " + std::to_string(uses) +
             " canonical paths although " + std::to_string(x) + " is never closest");
        break;
      }
    }
  }
  res.millis = ms_since(start);
  return res;
}

GraphBundle build_bundle(const Instance& inst) {
  GraphBundle b;
  b.inst = inst;
  b.vis = build_visibility_graph(inst);
  b.ht = build_half_theta6(inst);
  auto [g9, records] = build_g9(inst, b.ht);
  b.g9 = std::move(g9);
  b.records = std::move(records);
  b.ledger = compute_charges(inst, b.records);
  b.steps = find_transformations(inst, b.ht, b.records);
  b.g6 = build_g6(inst, b.ht, b.g9, b.steps);
  return b;
}

VerificationReport run_full_verification(const GraphBundle& b) {
  VerificationReport report;
  auto add = [&](CheckResult res, const std::string& name) {
    res.name = name;
    report.checks.push_back(std::move(res));
  };
  add(check_plane(b.ht.graph, b.inst), "plane.theta6");
  add(check_plane(b.g9, b.inst), "plane.g9");
  add(check_plane(b.g6, b.inst), "plane.g6");

  auto timed_ratio = [&](const GeoGraph& h, const GeoGraph& base, double limit,
                         const std::string& name) {
    auto start = Clock::now();
    CheckResult res{name};
    res.value = spanning_ratio(h, base, b.inst);
    if (!(res.value <= limit + kRatioTolerance)) {
      res.pass = false;
      res.witness = "ratio " + std::to_string(res.value) + " exceeds " + std::to_string(limit);
    }
    res.millis = ms_since(start);
    report.checks.push_back(std::move(res));
  };
  timed_ratio(b.ht.graph, b.vis, 2.0, "spanning.theta6_vs_vis");
  add(check_theorem1(b.inst, b.ht), "theorem1.confined_path");
  add(check_theorem2(b.inst, b.ht, b.g9, b.records), "theorem2.g9_paths");
  timed_ratio(b.g9, b.vis, 6.0, "spanning.g9_vs_vis");
  add(check_g6_spanning(b.inst, b.ht, b.g6, b.vis), "g6.spanning");
  add(check_degree_bounds(b.inst, b.g9, 9), "degree.g9");
  add(check_degree_bounds(b.inst, b.g6, 6), "degree.g6");
  add(check_charges(b.inst, b.ledger, b.g9), "charges.lemma_bounds");

  {
    auto start = Clock::now();
    CheckResult res{"subgraph.chain"};
    std::set<Edge> added;
    for (const TransformationStep& s : b.steps) added.insert(s.added);
    if (!b.g9.is_subgraph_of(b.ht.graph))
      res = {"subgraph.chain", false, "G9 not within half-theta-6"};
    else if (!b.ht.graph.is_subgraph_of(b.vis))
      res = {"subgraph.chain", false, "half-theta-6 not within Vis"};
    else if (!b.g6.is_subgraph_of(b.vis))
      res = {"subgraph.chain", false, "G6 not within Vis"};
    else {
      for (const Edge& e : b.g6.edges)
        if (!b.ht.graph.has_edge(e.first, e.second) && !added.count(e)) {
          res.pass = false;
          res.witness = "G6 edge " + edge_str(e.first, e.second) +
                        " is outside half-theta-6 but traceable to no transformation";
          break;
        }
    }
    res.millis = ms_since(start);
    report.checks.push_back(std::move(res));
  }
  add(check_structure(b.inst, b.ht, b.g9, b.records, b.vis), "structure.corollaries");
  return report;
}

}  // namespace theta6
