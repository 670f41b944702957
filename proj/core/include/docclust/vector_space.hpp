#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docclust/text_pipeline.hpp"

namespace docclust {

/// Sorted distinct terms of a corpus with their document frequencies.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws Error(InvariantViolation) unless terms are strictly sorted and
  /// 1 <= df <= document_count for every term.
  Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_frequency,
             std::size_t document_count);

  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t document_count() const noexcept { return document_count_; }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<std::size_t>& doc_frequency() const noexcept { return doc_frequency_; }

  std::optional<std::size_t> index_of(std::string_view term) const;

 private:
  std::vector<std::string> terms_;
  std::vector<std::size_t> doc_frequency_;
  std::size_t document_count_ = 0;
};

enum class WeightingScheme { TfRatio, TfIdf };

/// "tf" / "tfidf"
std::string_view scheme_name(WeightingScheme scheme) noexcept;
/// Accepts "tf", "tf_ratio", "tfidf", "tf_idf" (case-insensitive).
std::optional<WeightingScheme> parse_scheme(std::string_view name);

/// Dense documents x terms weight grid. Rows follow ingestion order.
class TermDocumentMatrix {
 public:
  TermDocumentMatrix() = default;
  TermDocumentMatrix(std::vector<std::string> row_ids, std::vector<std::string> terms,
                     std::vector<double> weights, WeightingScheme scheme);

  std::size_t rows() const noexcept { return row_ids_.size(); }
  std::size_t cols() const noexcept { return terms_.size(); }

  std::span<const double> row(std::size_t r) const {
    return {weights_.data() + r * cols(), cols()};
  }
  double at(std::size_t r, std::size_t c) const { return weights_[r * cols() + c]; }

  const std::vector<std::string>& row_ids() const noexcept { return row_ids_; }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  WeightingScheme scheme() const noexcept { return scheme_; }

  /// Copy with every weight multiplied by `factor`.
  TermDocumentMatrix scaled(double factor) const;

 private:
  std::vector<std::string> row_ids_;
  std::vector<std::string> terms_;
  std::vector<double> weights_;
  WeightingScheme scheme_ = WeightingScheme::TfRatio;
};

/// Throws Error(EmptyCorpus) for an empty document list.
Vocabulary build_vocabulary(std::span<const Document> documents);

/// count / kept_token_total. Throws Error(ZeroLengthDocument) when the
/// total is zero and Error(InvalidArgument) when count exceeds it.
double tf_weight(std::size_t count, std::size_t kept_token_total);

/// ln(D / df), no smoothing. Throws Error(InvalidDF) unless 1 <= df <= D.
double idf(std::size_t doc_frequency, std::size_t document_count);

/// Rows of zero-length documents are all zero. Throws
/// Error(VocabularyMismatch) when a document term is not in `vocab`.
/// `threads` only affects speed; the result is identical for any value.
TermDocumentMatrix build_matrix(std::span<const Document> documents, const Vocabulary& vocab,
                                WeightingScheme scheme, unsigned threads = 1);

// Export formats. CSV: header "doc_id,<term>,...", one row per document,
// weights at 9 significant digits. JSON: {scheme, documents, terms, weights}.
std::string matrix_to_csv(const TermDocumentMatrix& matrix);
std::string matrix_to_json(const TermDocumentMatrix& matrix);
TermDocumentMatrix matrix_from_csv(std::string_view csv, WeightingScheme scheme);
TermDocumentMatrix matrix_from_json(std::string_view json);

}  // namespace docclust
