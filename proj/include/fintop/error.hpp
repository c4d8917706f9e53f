#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fintop/point_set.hpp"

namespace fintop {

enum class ErrorKind {
  EmptyLabels,
  DuplicateLabel,
  UnknownLabel,
  OutOfRange,
  MissingEmptyOrFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  PointNotInOwnBasis,
  BasisNotNested,
  EmptyInput,
  ZeroRadius,
  PreconditionViolated,
  EmptyOrFullSubset,
  SizeTooLarge,
  SyntaxError,
  SchemaError,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library. `witness()` carries the
/// offending sets when there are any (e.g. the pair whose union is missing).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<PointSet> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<PointSet>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<PointSet> witness_;
};

}  // namespace fintop
