#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathalg {

enum class ErrorKind {
  // graph validation
  LevelMismatch,
  NoUniqueMin,
  DeadVertex,
  BadChosen,
  DanglingRef,
  DuplicateId,
  // lookups and argument checks
  UnknownVertex,
  UnknownEdge,
  BadMultiplicity,
  InvalidPath,
  NotComposable,
  MixedGraph,
  // input parsing
  ParseError,
  SyntaxError,
  UnknownSymbol,
  // resource limits
  LimitExceeded,
  BoundTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Coarse classification used by the command-line front end to pick exit codes.
enum class ErrorClass { Parse, Validation, Resource };

ErrorClass classify(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathalg
