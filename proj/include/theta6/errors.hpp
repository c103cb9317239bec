#pragma once

#include <stdexcept>
#include <string>

namespace theta6 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// instance_io
struct ParseError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct GenerationExhausted : Error {
  using Error::Error;
};

// cones / spanner_builder
struct DegenerateDirection : Error {
  using Error::Error;
};
struct NotInPositiveCone : Error {
  using Error::Error;
};
struct InvalidInstance : Error {
  using Error::Error;
};

// visibility
struct PreconditionViolated : Error {
  using Error::Error;
};

// degree_reduction
struct UnchargeableEdge : Error {
  using Error::Error;
};
struct InconsistentState : Error {
  using Error::Error;
};
struct ConflictDetected : Error {
  using Error::Error;
};

// verification
struct NotSubgraph : Error {
  using Error::Error;
};

}  // namespace theta6
