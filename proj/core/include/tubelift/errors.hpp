#pragma once

#include <stdexcept>
#include <string>

namespace tubelift {

// A mathematical check failed (inconsistent interpolation, broken invariant,
// non-constant Hecke ratio, ...). Distinct from bad input.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input rejected by a scope gate (parity, dimension, unsupported index).
class GateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParityGateError : public GateError {
 public:
  using GateError::GateError;
};

class DimensionGateError : public GateError {
 public:
  using GateError::GateError;
};

// A series or expansion is too short for the requested operation.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace tubelift
