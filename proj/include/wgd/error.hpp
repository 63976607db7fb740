#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgd {

enum class ErrorKind {
  kDuplicateEdge,
  kNonPositiveWeight,
  kVertexOutOfRange,
  kVertexNotInSet,
  kUnknownVertex,
  kInvalidDemands,
  kInvalidArgument,
  kNoSatisfyingSet,
  kMoveLimitExceeded,
  kPartitionCollapse,
  kNonImprovingMove,
  kCompletionAssertFailed,
  kSingleVertexGraph,
  kVerificationFailed,
  kTooLarge,
  kGenerationFailed,
  kTooFewCells,
  kDuplicateCell,
  kParseError,
  kIoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Input errors are problems with what the caller handed us; the rest mean
// "no partition could be produced" for an otherwise well-formed input.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wgd
