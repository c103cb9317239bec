#include "theta6/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "theta6/errors.hpp"

namespace theta6 {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int lineno, const std::string& why) {
  throw ParseError("line " + std::to_string(lineno) + ": " + why);
}

Scalar require_rational(const std::string& tok, int lineno) {
  auto v = parse_rational(tok);
  if (!v) parse_fail(lineno, "'" + tok + "' is not an integer or p/q rational");
  return *v;
}

int require_count(const std::string& tok, int lineno) {
  for (char c : tok)
    if (c < '0' || c > '9') parse_fail(lineno, "'" + tok + "' is not a count");
  try {
    return std::stoi(tok);
  } catch (...) {
    parse_fail(lineno, "count '" + tok + "' out of range");
  }
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line != kInstanceHeader)
    parse_fail(lineno ? lineno : 1, std::string("expected header '") + kInstanceHeader + "'");

  InstanceFile file;
  if (!next_line()) parse_fail(lineno, "missing points section");
  while (line.rfind("meta ", 0) == 0) {
    std::string rest = line.substr(5);
    auto space = rest.find(' ');
    if (space == std::string::npos || space == 0) parse_fail(lineno, "meta needs a key and a value");
    file.meta.push_back({rest.substr(0, space), rest.substr(space + 1)});
    if (!next_line()) parse_fail(lineno, "missing points section");
  }

  auto header = split_ws(line);
  if (header.size() != 2 || header[0] != "points") parse_fail(lineno, "expected 'points <N>'");
  int n = require_count(header[1], lineno);
  Instance& inst = file.instance;
  inst.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!next_line()) parse_fail(lineno, "expected " + std::to_string(n) + " points");
    auto toks = split_ws(line);
    if (toks.size() != 2) parse_fail(lineno, "expected '<x> <y>'");
    inst.points.push_back({require_rational(toks[0], lineno), require_rational(toks[1], lineno)});
  }

  if (!next_line()) parse_fail(lineno, "missing constraints section");
  header = split_ws(line);
  if (header.size() != 2 || header[0] != "constraints")
    parse_fail(lineno, "expected 'constraints <M>'");
  int m = require_count(header[1], lineno);
  for (int i = 0; i < m; ++i) {
    if (!next_line()) parse_fail(lineno, "expected " + std::to_string(m) + " constraints");
    auto toks = split_ws(line);
    if (toks.size() != 2) parse_fail(lineno, "expected '<a> <b>'");
    int a = require_count(toks[0], lineno);
    int b = require_count(toks[1], lineno);
    if (a >= n || b >= n) parse_fail(lineno, "constraint endpoint out of range");
    if (a == b) parse_fail(lineno, "constraint endpoints coincide");
    inst.constraints.push_back(make_edge(a, b));
  }
  if (next_line()) parse_fail(lineno, "trailing content after constraints");
  auto before = inst.constraints.size();
  std::sort(inst.constraints.begin(), inst.constraints.end());
  inst.constraints.erase(std::unique(inst.constraints.begin(), inst.constraints.end()),
                         inst.constraints.end());
  if (inst.constraints.size() != before) throw ParseError("duplicate constraint");

  ValidationReport report = validate_general_position(inst);
  if (!report.valid()) {
    std::string msg = "invalid instance:";
    for (const Violation& v : report.violations) msg += " [" + v.describe() + "]";
    throw ValidationError(msg, std::move(report));
  }
  return file;
}

InstanceFile parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string serialize_instance(const InstanceFile& file) {
  std::ostringstream out;
  out << kInstanceHeader << "\n";
  for (const auto& [key, value] : file.meta) out << "meta " << key << " " << value << "\n";
  out << "points " << file.instance.n() << "\n";
  for (const Point& p : file.instance.points)
    out << format_rational(p.x) << " " << format_rational(p.y) << "\n";
  out << "constraints " << file.instance.constraints.size() << "\n";
  for (const auto& [a, b] : file.instance.constraints) out << a << " " << b << "\n";
  return out.str();
}

void write_instance_file(const std::string& path, const InstanceFile& file) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << serialize_instance(file);
}

std::string instance_digest(const Instance& inst) {
  std::string bytes = serialize_instance({inst, {}});
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// mt19937_64 is pinned by the standard, so instances are reproducible across
// platforms; avoid std::uniform_int_distribution, which is not.
long bounded(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

InstanceFile generate_instance(const GenParams& params) {
  if (params.n < 1) throw GenerationExhausted("n must be at least 1");
  std::mt19937_64 rng(params.seed);
  Instance inst;
  long attempts = 0;
  const long max_attempts = 4000l * params.n + 4000;
  while (inst.n() < params.n) {
    if (++attempts > max_attempts)
      throw GenerationExhausted("rejection sampling failed; bounding box too small");
    Point cand{Scalar(bounded(rng, 0, params.bbox)), Scalar(bounded(rng, 0, params.bbox))};
    bool ok = true;
    for (const Point& p : inst.points) {
      if (p == cand || p.y == cand.y) {  // coincident or a 0-degree direction
        ok = false;
        break;
      }
    }
    for (int i = 0; ok && i < inst.n(); ++i)
      for (int j = i + 1; j < inst.n(); ++j)
        if (orientation(inst.points[i], inst.points[j], cand) == Orientation::Collinear) {
          ok = false;
          break;
        }
    if (ok) inst.points.push_back(cand);
  }

  if (params.constraint_budget > 0 && inst.n() >= 2) {
    std::vector<Edge> pairs;
    for (int i = 0; i < inst.n(); ++i)
      for (int j = i + 1; j < inst.n(); ++j) pairs.push_back({i, j});
    std::sort(pairs.begin(), pairs.end(), [&](const Edge& a, const Edge& b) {
      auto sq = [&](const Edge& e) -> Scalar {
        Scalar dx = inst.points[e.first].x - inst.points[e.second].x;
        Scalar dy = inst.points[e.first].y - inst.points[e.second].y;
        return dx * dx + dy * dy;
      };
      Scalar la = sq(a), lb = sq(b);
      return la != lb ? la < lb : a < b;
    });
    std::set<Edge> accepted;
    long tries = 60l * params.constraint_budget;
    while (static_cast<int>(accepted.size()) < params.constraint_budget && tries-- > 0) {
      // quadratic rank bias keeps constraints short enough to block things
      double r = (rng() >> 11) * 0x1.0p-53;
      size_t idx = static_cast<size_t>(r * r * pairs.size());
      Edge e = pairs[std::min(idx, pairs.size() - 1)];
      if (accepted.count(e)) continue;
      Segment s{inst.points[e.first], inst.points[e.second]};
      bool crosses = false;
      for (const Edge& c : accepted)
        if (properly_intersect(s, {inst.points[c.first], inst.points[c.second]})) {
          crosses = true;
          break;
        }
      if (!crosses) accepted.insert(e);
    }
    inst.constraints.assign(accepted.begin(), accepted.end());
  }

  InstanceFile file;
  file.instance = std::move(inst);
  file.meta = {{"seed", std::to_string(params.seed)},
               {"generator",
                "n=" + std::to_string(params.n) + " budget=" + std::to_string(params.constraint_budget) +
                    " bbox=" + std::to_string(params.bbox)}};
  return file;
}

namespace {

double svg_x(double x, double scale, double offx) { return offx + x * scale; }
double svg_y(double y, double scale, double offy) { return offy - y * scale; }  // y grows upward

}  // namespace

void render_svg(const Instance& inst, const std::vector<SvgLayer>& layers, std::ostream& out) {
  const double size = 800, margin = 40;
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool first = true;
  for (const Point& p : inst.points) {
    double x = to_double_nearest(p.x), y = to_double_nearest(p.y);
    if (first) {
      minx = maxx = x;
      miny = maxy = y;
      first = false;
    }
    minx = std::min(minx, x), maxx = std::max(maxx, x);
    miny = std::min(miny, y), maxy = std::max(maxy, y);
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double scale = (size - 2 * margin) / span;
  double offx = margin - minx * scale;
  double offy = size - margin + miny * scale;

  static const char* palette[] = {"#4878cf", "#e17c2f", "#2ca02c", "#9467bd", "#7f7f7f"};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto emit_x = [&](const Point& p) { return svg_x(to_double_nearest(p.x), scale, offx); };
  auto emit_y = [&](const Point& p) { return svg_y(to_double_nearest(p.y), scale, offy); };
  int color = 0;
  for (const SvgLayer& layer : layers) {
    out << "  <g stroke=\"" << palette[color % 5] << "\" stroke-width=\"1.6\" fill=\"none\" id=\""
        << layer.name << "\">\n";
    if (layer.graph)
      for (const auto& [u, v] : layer.graph->edges)
        out << "    <line x1=\"" << emit_x(inst.points[u]) << "\" y1=\"" << emit_y(inst.points[u])
            << "\" x2=\"" << emit_x(inst.points[v]) << "\" y2=\"" << emit_y(inst.points[v])
            << "\"/>\n";
    out << "  </g>\n";
    ++color;
  }
  out << "  <g stroke=\"black\" stroke-width=\"4.5\" id=\"constraints\">\n";
  for (const auto& [u, v] : inst.constraints)
    out << "    <line x1=\"" << emit_x(inst.points[u]) << "\" y1=\"" << emit_y(inst.points[u])
        << "\" x2=\"" << emit_x(inst.points[v]) << "\" y2=\"" << emit_y(inst.points[v]) << "\"/>\n";
  out << "  </g>\n  <g font-size=\"11\" font-family=\"sans-serif\">\n";
  for (int i = 0; i < inst.n(); ++i) {
    out << "    <circle cx=\"" << emit_x(inst.points[i]) << "\" cy=\"" << emit_y(inst.points[i])
        << "\" r=\"3\" fill=\"black\"/>\n";
    out << "    <text x=\"" << emit_x(inst.points[i]) + 5 << "\" y=\"" << emit_y(inst.points[i]) - 5
        << "\">" << i << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
}

void render_svg_file(const Instance& inst, const std::vector<SvgLayer>& layers,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  render_svg(inst, layers, out);
  if (!out) throw IoError("failed while writing " + path);
}

nlohmann::json make_run_report(const GraphBundle& b, const VerificationReport& report,
                               double total_ms) {
  nlohmann::json graphs;
  auto graph_summary = [&](const GeoGraph& g) {
    auto deg = g.degrees();
    return nlohmann::json{{"edges", g.edge_count()},
                          {"max_degree", deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end())}};
  };
  graphs["vis"] = graph_summary(b.vis);
  graphs["theta6"] = graph_summary(b.ht.graph);
  graphs["g9"] = graph_summary(b.g9);
  graphs["g6"] = graph_summary(b.g6);

  int max_c = 0;
  for (int v = 0; v < b.inst.n(); ++v) max_c = std::max(max_c, b.inst.c_of(v));

  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json ratios;
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", c.value},
                      {"witness", c.witness},
                      {"ms", c.millis}});
    if (c.name.rfind("spanning.", 0) == 0) ratios[c.name.substr(9)] = c.value;
  }
  return nlohmann::json{{"schema", "theta6-run v1"},
                        {"instance",
                         {{"digest", instance_digest(b.inst)},
                          {"n", b.inst.n()},
                          {"constraints", b.inst.constraints.size()},
                          {"max_c", max_c}}},
                        {"graphs", graphs},
                        {"transformations", b.steps.size()},
                        {"ratios", ratios},
                        {"checks", checks},
                        {"all_pass", report.all_pass()},
                        {"total_ms", total_ms}};
}

}  // namespace theta6
