#include "wgd/error.hpp"

namespace wgd {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kNonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::kVertexNotInSet: return "VertexNotInSet";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kInvalidDemands: return "InvalidDemands";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNoSatisfyingSet: return "NoSatisfyingSet";
    case ErrorKind::kMoveLimitExceeded: return "MoveLimitExceeded";
    case ErrorKind::kPartitionCollapse: return "PartitionCollapse";
    case ErrorKind::kNonImprovingMove: return "NonImprovingMove";
    case ErrorKind::kCompletionAssertFailed: return "CompletionAssertFailed";
    case ErrorKind::kSingleVertexGraph: return "SingleVertexGraph";
    case ErrorKind::kVerificationFailed: return "VerificationFailed";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kGenerationFailed: return "GenerationFailed";
    case ErrorKind::kTooFewCells: return "TooFewCells";
    case ErrorKind::kDuplicateCell: return "DuplicateCell";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNoSatisfyingSet:
    case ErrorKind::kMoveLimitExceeded:
    case ErrorKind::kPartitionCollapse:
    case ErrorKind::kNonImprovingMove:
    case ErrorKind::kCompletionAssertFailed:
    case ErrorKind::kSingleVertexGraph:
    case ErrorKind::kVerificationFailed:
    case ErrorKind::kGenerationFailed:
      return false;
    default:
      return true;
  }
}

}  // namespace wgd
