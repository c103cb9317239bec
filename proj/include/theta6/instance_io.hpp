#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "theta6/errors.hpp"
#include "theta6/verification.hpp"

namespace theta6 {

// A parsed instance that violates general position or has crossing
// constraints; the report carries the witnesses.
struct ValidationError : Error {
  ValidationReport report;
  ValidationError(const std::string& msg, ValidationReport rep)
      : Error(msg), report(std::move(rep)) {}
};

// Text format, version 1:
//
//   theta6 v1
//   meta <key> <value...>        (zero or more)
//   points <N>
//   <x> <y>                      (exact rationals: "7", "-3", "22/7")
//   constraints <M>
//   <a> <b>                      (vertex indices, a < b, ascending)
//
// Doubles are rejected so exactness survives the file boundary. Canonical
// serializations round-trip byte for byte.
inline constexpr const char* kInstanceHeader = "theta6 v1";

struct InstanceFile {
  Instance instance;
  std::vector<std::pair<std::string, std::string>> meta;
};

// Throws ParseError for malformed input and InvalidInstance (carrying the
// first witness) when the parsed instance violates general position or has
// crossing constraints.
InstanceFile parse_instance(const std::string& text);
InstanceFile parse_instance_file(const std::string& path);

std::string serialize_instance(const InstanceFile& file);
void write_instance_file(const std::string& path, const InstanceFile& file);

// FNV-1a of the canonical serialization, hex.
std::string instance_digest(const Instance& inst);

struct GenParams {
  std::uint64_t seed = 1;
  int n = 10;
  int constraint_budget = 0;
  long bbox = 10000;  // integer coordinates in [0, bbox]^2
};

// Deterministic per seed. Points are rejection-sampled so the result is
// always in general position; constraints are sampled biased toward short
// segments and accepted greedily when they cross no earlier constraint.
InstanceFile generate_instance(const GenParams& params);  // throws GenerationExhausted

struct SvgLayer {
  std::string name;
  const GeoGraph* graph;
};

// Layered rendering: constraints thick, one stroke color per layer, labeled
// vertices, exact coordinates scaled into the viewport.
void render_svg(const Instance& inst, const std::vector<SvgLayer>& layers, std::ostream& out);
void render_svg_file(const Instance& inst, const std::vector<SvgLayer>& layers,
                     const std::string& path);  // throws IoError

// Machine-readable record of one verified instance; stable field names.
nlohmann::json make_run_report(const GraphBundle& bundle, const VerificationReport& report,
                               double total_ms);

}  // namespace theta6
