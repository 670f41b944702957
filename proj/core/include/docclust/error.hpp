#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace docclust {

enum class ErrorCode {
  EmptyCorpus,
  UnreadableFile,
  ZeroLengthDocument,
  InvalidDF,
  VocabularyMismatch,
  DimensionMismatch,
  BadK,
  MissingLabels,
  NotAMedoid,
  AlreadyMedoid,
  UnlabeledDocument,
  InvalidConfig,
  InvalidArgument,
  ParseError,
  WriteFailed,
  InvariantViolation,
};

/// Stable, machine-parsable name of an error code ("BadK", "EmptyCorpus", ...).
std::string_view error_name(ErrorCode code) noexcept;

/// Process exit status for an error code: 1 I/O, 2 config or precondition,
/// 3 internal invariant violation.
int exit_status(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace docclust
