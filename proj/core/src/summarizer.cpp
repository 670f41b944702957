#include "docclust/summarizer.hpp"

#include <algorithm>
#include <numeric>
#include <json.hpp>

#include "docclust/error.hpp"
#include "io_util.hpp"

namespace docclust {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::string_view scope_name(SummaryScope scope) noexcept {
  return scope == SummaryScope::Cluster ? "cluster" : "document";
}

std::vector<Sentence> split_sentences(std::string_view raw_text, std::string_view doc_id) {
  std::vector<Sentence> sentences;
  auto emit = [&](std::string_view piece) {
    piece = detail::trim(piece);
    if (piece.empty()) return;
    Sentence s;
    s.doc_id = std::string(doc_id);
    s.index = sentences.size();
    s.text = std::string(piece);
    sentences.push_back(std::move(s));
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < raw_text.size(); ++i) {
    const char c = raw_text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 == raw_text.size() || is_space(raw_text[i + 1])) {
      emit(raw_text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < raw_text.size()) emit(raw_text.substr(start));
  return sentences;
}

double score_sentence(std::string_view sentence_text, std::span<const double> doc_row,
                      const Vocabulary& vocab, const TextPipeline& pipeline, ScoreMode mode) {
  if (doc_row.size() != vocab.size()) {
    throw Error(ErrorCode::DimensionMismatch, "document row width does not match vocabulary");
  }
  const auto terms = pipeline.terms(sentence_text);
  if (terms.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& t : terms) {
    if (auto col = vocab.index_of(t)) sum += doc_row[*col];
  }
  return mode == ScoreMode::Sum ? sum : sum / static_cast<double>(terms.size());
}

// ---------------------------------------------------------------------------

Summarizer::Summarizer(const TermDocumentMatrix& matrix, const Vocabulary& vocab,
                       const TextPipeline& pipeline, ScoreMode mode)
    : matrix_(matrix), vocab_(vocab), pipeline_(pipeline), mode_(mode) {
  if (matrix.cols() != vocab.size()) {
    throw Error(ErrorCode::VocabularyMismatch, "matrix columns do not match the vocabulary");
  }
  for (std::size_t r = 0; r < matrix.rows(); ++r) row_by_id_.emplace(matrix.row_ids()[r], r);
}

std::size_t Summarizer::row_of(const Document& doc) const {
  auto it = row_by_id_.find(doc.id);
  if (it == row_by_id_.end()) {
    throw Error(ErrorCode::InvalidArgument, "document '" + doc.id + "' has no matrix row");
  }
  return it->second;
}

std::vector<Sentence> Summarizer::scored_sentences(const Document& doc) const {
  const auto row = matrix_.row(row_of(doc));
  auto sentences = split_sentences(doc.raw_text, doc.id);
  for (auto& s : sentences) s.score = score_sentence(s.text, row, vocab_, pipeline_, mode_);
  return sentences;
}

Summary Summarizer::summarize_document(const Document& doc, std::size_t n) const {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "summary length must be >= 1");
  auto sentences = scored_sentences(doc);

  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sentences[a].score > sentences[b].score;
  });
  order.resize(std::min(n, order.size()));
  std::sort(order.begin(), order.end());

  Summary summary;
  summary.scope = SummaryScope::Document;
  summary.n_requested = n;
  for (std::size_t i : order) summary.sentences.push_back(std::move(sentences[i]));
  return summary;
}

Summary Summarizer::summarize_cluster(std::span<const Document> corpus,
                                      std::span<const std::size_t> member_rows,
                                      std::size_t n_per_doc) const {
  if (member_rows.empty()) throw Error(ErrorCode::InvalidArgument, "cluster has no members");
  std::vector<std::size_t> rows(member_rows.begin(), member_rows.end());
  std::sort(rows.begin(), rows.end(),
            [&](std::size_t a, std::size_t b) { return corpus[a].id < corpus[b].id; });

  Summary summary;
  summary.scope = SummaryScope::Cluster;
  summary.n_requested = n_per_doc;
  for (std::size_t r : rows) {
    auto part = summarize_document(corpus[r], n_per_doc);
    for (auto& s : part.sentences) summary.sentences.push_back(std::move(s));
  }
  return summary;
}

// ---------------------------------------------------------------------------

std::string summary_to_text(const Summary& summary) {
  std::string out;
  const std::string* current = nullptr;
  for (const auto& s : summary.sentences) {
    if (current == nullptr || *current != s.doc_id) {
      if (current != nullptr) out += '\n';
      out += "== " + s.doc_id + " ==\n";
      current = &s.doc_id;
    }
    out += s.text;
    out += '\n';
  }
  return out;
}

std::string summary_to_json(const Summary& summary) {
  nlohmann::ordered_json j;
  j["scope"] = scope_name(summary.scope);
  auto items = nlohmann::ordered_json::array();
  for (const auto& s : summary.sentences) {
    nlohmann::ordered_json item;
    item["doc_id"] = s.doc_id;
    item["sentence_index"] = s.index;
    item["score"] = s.score;
    item["text"] = s.text;
    items.push_back(std::move(item));
  }
  j["items"] = std::move(items);
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

Summary summary_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    Summary summary;
    const auto scope = j.at("scope").get<std::string>();
    if (scope == "document") {
      summary.scope = SummaryScope::Document;
    } else if (scope == "cluster") {
      summary.scope = SummaryScope::Cluster;
    } else {
      throw Error(ErrorCode::ParseError, "unknown summary scope '" + scope + "'");
    }
    for (const auto& item : j.at("items")) {
      Sentence s;
      s.doc_id = item.at("doc_id").get<std::string>();
      s.index = item.at("sentence_index").get<std::size_t>();
      s.score = item.at("score").get<double>();
      s.text = item.at("text").get<std::string>();
      summary.sentences.push_back(std::move(s));
    }
    return summary;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("summary JSON: ") + e.what());
  }
}

}  // namespace docclust
