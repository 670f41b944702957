#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "docclust/text_pipeline.hpp"
#include "docclust/vector_space.hpp"

namespace docclust {

struct Sentence {
  std::string doc_id;
  std::size_t index = 0;  // position within the document
  std::string text;
  double score = 0.0;

  bool operator==(const Sentence&) const = default;
};

enum class SummaryScope { Document, Cluster };

std::string_view scope_name(SummaryScope scope) noexcept;

struct Summary {
  SummaryScope scope = SummaryScope::Document;
  std::vector<Sentence> sentences;  // original document order
  std::size_t n_requested = 0;

  bool operator==(const Summary&) const = default;
};

enum class ScoreMode {
  Mean,  // sum of term weights / kept term count
  Sum,   // raw sum of term weights
};

/// Splits at '.', '!' or '?' when followed by whitespace or end of text.
/// Terminal punctuation stays with its sentence; surrounding whitespace is
/// trimmed and empty pieces are dropped. Abbreviations such as "Dr." do
/// split (known limitation).
std::vector<Sentence> split_sentences(std::string_view raw_text, std::string_view doc_id = {});

/// Weight of a sentence against its document's matrix row. Each kept,
/// stemmed term contributes its row weight once per occurrence; a sentence
/// with no kept terms scores 0.
double score_sentence(std::string_view sentence_text, std::span<const double> doc_row,
                      const Vocabulary& vocab, const TextPipeline& pipeline,
                      ScoreMode mode = ScoreMode::Mean);

/// Extractive summaries against one term-document matrix. `vocab` must be
/// the vocabulary the matrix was built from.
class Summarizer {
 public:
  Summarizer(const TermDocumentMatrix& matrix, const Vocabulary& vocab,
             const TextPipeline& pipeline, ScoreMode mode = ScoreMode::Mean);

  /// All sentences of `doc`, scored.
  std::vector<Sentence> scored_sentences(const Document& doc) const;

  /// Top-n sentences by score (ties: earlier sentence first), returned in
  /// original order. Throws Error(InvalidArgument) for n == 0 or a document
  /// that has no matrix row.
  Summary summarize_document(const Document& doc, std::size_t n) const;

  /// Per-document summaries of the member rows, concatenated in document id
  /// order. Throws Error(InvalidArgument) for an empty cluster.
  Summary summarize_cluster(std::span<const Document> corpus,
                            std::span<const std::size_t> member_rows,
                            std::size_t n_per_doc) const;

 private:
  std::size_t row_of(const Document& doc) const;

  const TermDocumentMatrix& matrix_;
  const Vocabulary& vocab_;
  const TextPipeline& pipeline_;
  ScoreMode mode_;
  std::unordered_map<std::string, std::size_t> row_by_id_;
};

/// Plain text: a "== <doc_id> ==" header before each document's sentences.
std::string summary_to_text(const Summary& summary);
/// {scope, items:[{doc_id, sentence_index, score, text}]}
std::string summary_to_json(const Summary& summary);
/// n_requested is not part of the JSON form and is left at zero.
Summary summary_from_json(std::string_view json);

}  // namespace docclust
