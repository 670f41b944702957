#include "docclust/error.hpp"

namespace docclust {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::UnreadableFile: return "UnreadableFile";
    case ErrorCode::ZeroLengthDocument: return "ZeroLengthDocument";
    case ErrorCode::InvalidDF: return "InvalidDF";
    case ErrorCode::VocabularyMismatch: return "VocabularyMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::MissingLabels: return "MissingLabels";
    case ErrorCode::NotAMedoid: return "NotAMedoid";
    case ErrorCode::AlreadyMedoid: return "AlreadyMedoid";
    case ErrorCode::UnlabeledDocument: return "UnlabeledDocument";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WriteFailed: return "WriteFailed";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnreadableFile:
    case ErrorCode::WriteFailed:
    case ErrorCode::ParseError:
      return 1;
    case ErrorCode::InvariantViolation:
      return 3;
    default:
      return 2;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace docclust
