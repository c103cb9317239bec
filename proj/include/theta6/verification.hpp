#pragma once

#include <string>

#include "theta6/degree_reduction.hpp"

namespace theta6 {

// Relative tolerance for double-precision length sums; the constructions
// themselves are exact and contribute no error.
inline constexpr double kRatioTolerance = 1e-9;

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // concrete offender on failure
  double value = 0;     // measured extreme (max ratio, max slack, ...)
  double millis = 0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_text() const;
};

// Theorem bound factors; monotone on their stated domains.
inline double theorem1_factor(double alpha) { return std::sqrt(3.0) * std::cos(alpha) + std::sin(alpha); }
inline double theorem2_factor(double alpha) { return std::cos(alpha) + 5.0 * std::sin(alpha) / std::sqrt(3.0); }

// No two edges properly intersect; failure carries the crossing pair.
CheckResult check_plane(const GeoGraph& g, const Instance& inst);

// Single-source shortest path distances under Euclidean weights; +inf when
// unreachable.
std::vector<double> shortest_path_lengths(const GeoGraph& g, const Instance& inst, int source);

// Max over edges (u,v) of `base` of d_h(u,v) / |uv|. Requires h to be a
// subgraph of base on the same vertex set (throws NotSubgraph); +inf when any
// base edge's endpoints are disconnected in h. Checking base edges suffices:
// shortest paths in base decompose into base edges.
double spanning_ratio(const GeoGraph& h, const GeoGraph& base, const Instance& inst);

// For every visible pair (u,w) with w in a positive cone of u, the half-
// theta-6 graph restricted to the closed canonical triangle of (u,w) contains
// a u-w path of length <= (sqrt(3) cos a + sin a) |uw|.
CheckResult check_theorem1(const Instance& inst, const HalfThetaGraph& ht);

// For every half-theta-6 edge (u,w) with w in a negative cone of u:
// d_G9(u,w) <= 3 |uw| always, and <= (cos a + 5 sin a / sqrt(3)) |uw| with a
// measured per canonical-path record; plus global ratio(G9, half-theta-6) <= 3.
CheckResult check_theorem2(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                           const std::vector<CanonicalPathRecord>& records);

// d_G6(u,w) <= 3 |uw| for every half-theta-6 edge, plus ratio(G6, Vis) <= 6.
CheckResult check_g6_spanning(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g6,
                              const GeoGraph& vis);

// deg(v) <= c(v) + slack for every vertex.
CheckResult check_degree_bounds(const Instance& inst, const GeoGraph& g, int slack);

// Ledger bounds: positive cones <= max{2, c_i+1}, negative cones <= c_ibar+1,
// and per-vertex totals dominate G9 degrees.
CheckResult check_charges(const Instance& inst, const ChargeLedger& ledger, const GeoGraph& g9);

// Canonical-path corollaries (consecutive-vertex cone exclusion and empty
// triangles), subgraph chain G9 c half-theta-6 c Vis, and the audit that a
// path edge whose far endpoint is not a closest canonical vertex is used by
// at most one canonical path.
CheckResult check_structure(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                            const std::vector<CanonicalPathRecord>& records, const GeoGraph& vis);

// Everything built from one instance.
struct GraphBundle {
  Instance inst;
  GeoGraph vis;
  HalfThetaGraph ht;
  GeoGraph g9;
  std::vector<CanonicalPathRecord> records;
  ChargeLedger ledger;
  std::vector<TransformationStep> steps;
  GeoGraph g6;
};

GraphBundle build_bundle(const Instance& inst);

// The full check suite over one bundle; every claim the library makes about
// its outputs, one CheckResult per claim.
VerificationReport run_full_verification(const GraphBundle& bundle);

}  // namespace theta6
