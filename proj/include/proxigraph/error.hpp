#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxigraph {

enum class ErrorKind {
  DuplicatePoints,
  TooFewPoints,
  KOutOfRange,
  NonpositiveEpsilon,
  BadSectorCount,
  TargetOutOfRange,
  InvalidParameter,
  MissingParameter,
  UnknownAlgorithm,
  TooManyPoints,
  ParseError,
  EmptyInput,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the named kinds above;
/// the CLI and the HTTP service report that name verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace proxigraph
