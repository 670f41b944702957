#include "docclust/vector_space.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "docclust/error.hpp"
#include "parallel.hpp"

namespace docclust {

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_frequency,
                       std::size_t document_count)
    : terms_(std::move(terms)),
      doc_frequency_(std::move(doc_frequency)),
      document_count_(document_count) {
  if (terms_.size() != doc_frequency_.size()) {
    throw Error(ErrorCode::InvariantViolation, "vocabulary terms/df length mismatch");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0 && !(terms_[i - 1] < terms_[i])) {
      throw Error(ErrorCode::InvariantViolation, "vocabulary terms not strictly sorted");
    }
    if (doc_frequency_[i] < 1 || doc_frequency_[i] > document_count_) {
      throw Error(ErrorCode::InvariantViolation, "document frequency out of range for '" +
                                                     terms_[i] + "'");
    }
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view term) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == terms_.end() || *it != term) return std::nullopt;
  return static_cast<std::size_t>(it - terms_.begin());
}

std::string_view scheme_name(WeightingScheme scheme) noexcept {
  return scheme == WeightingScheme::TfIdf ? "tfidf" : "tf";
}

std::optional<WeightingScheme> parse_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "tf" || lower == "tf_ratio" || lower == "tf-ratio") return WeightingScheme::TfRatio;
  if (lower == "tfidf" || lower == "tf_idf" || lower == "tf-idf") return WeightingScheme::TfIdf;
  return std::nullopt;
}

TermDocumentMatrix::TermDocumentMatrix(std::vector<std::string> row_ids,
                                       std::vector<std::string> terms,
                                       std::vector<double> weights, WeightingScheme scheme)
    : row_ids_(std::move(row_ids)),
      terms_(std::move(terms)),
      weights_(std::move(weights)),
      scheme_(scheme) {
  if (weights_.size() != row_ids_.size() * terms_.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "weight grid has " + std::to_string(weights_.size()) + " entries, expected " +
                    std::to_string(row_ids_.size()) + "x" + std::to_string(terms_.size()));
  }
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvariantViolation, "matrix weights must be finite and >= 0");
    }
  }
}

TermDocumentMatrix TermDocumentMatrix::scaled(double factor) const {
  std::vector<double> w(weights_);
  for (double& x : w) x *= factor;
  return TermDocumentMatrix(row_ids_, terms_, std::move(w), scheme_);
}

Vocabulary build_vocabulary(std::span<const Document> documents) {
  if (documents.empty()) {
    throw Error(ErrorCode::EmptyCorpus, "cannot build a vocabulary from zero documents");
  }
  std::map<std::string_view, std::size_t> df;
  for (const auto& doc : documents) {
    for (const auto& [term, count] : doc.term_counts) {
      if (count > 0) ++df[term];
    }
  }
  std::vector<std::string> terms;
  std::vector<std::size_t> freq;
  terms.reserve(df.size());
  freq.reserve(df.size());
  for (const auto& [term, n] : df) {
    terms.emplace_back(term);
    freq.push_back(n);
  }
  return Vocabulary(std::move(terms), std::move(freq), documents.size());
}

double tf_weight(std::size_t count, std::size_t kept_token_total) {
  if (kept_token_total == 0) {
    throw Error(ErrorCode::ZeroLengthDocument, "term frequency requested for a zero-length document");
  }
  if (count > kept_token_total) {
    throw Error(ErrorCode::InvalidArgument, "term count " + std::to_string(count) +
                                                " exceeds document total " +
                                                std::to_string(kept_token_total));
  }
  return static_cast<double>(count) / static_cast<double>(kept_token_total);
}

double idf(std::size_t doc_frequency, std::size_t document_count) {
  if (doc_frequency < 1 || doc_frequency > document_count) {
    throw Error(ErrorCode::InvalidDF, "document frequency " + std::to_string(doc_frequency) +
                                          " outside [1, " + std::to_string(document_count) + "]");
  }
  return std::log(static_cast<double>(document_count) / static_cast<double>(doc_frequency));
}

TermDocumentMatrix build_matrix(std::span<const Document> documents, const Vocabulary& vocab,
                                WeightingScheme scheme, unsigned threads) {
  const std::size_t rows = documents.size();
  const std::size_t cols = vocab.size();
  if (rows != vocab.document_count()) {
    throw Error(ErrorCode::VocabularyMismatch,
                "vocabulary was built from " + std::to_string(vocab.document_count()) +
                    " documents, matrix requested for " + std::to_string(rows));
  }

  std::vector<double> idf_by_term(cols, 1.0);
  if (scheme == WeightingScheme::TfIdf) {
    for (std::size_t t = 0; t < cols; ++t) {
      idf_by_term[t] = idf(vocab.doc_frequency()[t], vocab.document_count());
    }
  }

  std::vector<double> weights(rows * cols, 0.0);
  detail::parallel_for(rows, threads, [&](std::size_t r) {
    const Document& doc = documents[r];
    for (const auto& [term, count] : doc.term_counts) {
      const auto col = vocab.index_of(term);
      if (!col) {
        throw Error(ErrorCode::VocabularyMismatch,
                    "term '" + term + "' of document '" + doc.id + "' is not in the vocabulary");
      }
      double w = tf_weight(count, doc.kept_token_total);
      if (scheme == WeightingScheme::TfIdf) w *= idf_by_term[*col];
      weights[r * cols + *col] = w;
    }
  });

  std::vector<std::string> ids;
  ids.reserve(rows);
  for (const auto& doc : documents) ids.push_back(doc.id);
  return TermDocumentMatrix(std::move(ids), vocab.terms(), std::move(weights), scheme);
}

}  // namespace docclust
