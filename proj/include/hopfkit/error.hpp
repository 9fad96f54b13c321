#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfkit {

enum class ErrorKind {
  DimensionMismatch,
  IndexOutOfRange,
  NotPrime,
  AlgebraMismatch,
  NotBalanced,
  BaseMismatch,
  ShapeMismatch,
  NotColax,
  UnitNotWellDefined,
  UnsupportedBase,
  PoolNotFinite,
  InvalidStructure,
  ParseError,
  ShapeError,
  UnknownName,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/* One failed identity. `witness` holds basis indices locating the failure. */
struct Violation {
  std::string axiom;
  std::vector<std::size_t> witness;
};

using CheckReport = std::vector<Violation>;

std::string format_violation(const Violation& v);

}  // namespace hopfkit
