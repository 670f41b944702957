#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace docclust {

/// Term -> occurrence count. Ordered so that iteration is deterministic.
using TermCounts = std::map<std::string, std::size_t, std::less<>>;

/// One ingested text.
///
/// Invariants once populated by TextPipeline::make_document:
///  - kept_token_total == sum of term_counts values;
///  - every term_counts key is lowercase, non-empty and not a stopword.
struct Document {
  std::string id;
  std::optional<std::string> label;
  std::string raw_text;
  TermCounts term_counts;
  std::size_t kept_token_total = 0;
};

class StopwordList {
 public:
  StopwordList() = default;
  StopwordList(std::set<std::string, std::less<>> words, std::string source);

  /// The default English list shipped with the library (data/stopwords.txt).
  static const StopwordList& builtin();

  /// One word per line; blank lines and lines starting with '#' are ignored.
  static StopwordList parse(std::string_view text, std::string source);
  static StopwordList from_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const;

  const std::set<std::string, std::less<>>& words() const { return words_; }
  const std::string& source() const { return source_; }

 private:
  std::set<std::string, std::less<>> words_;
  std::string source_;
};

/// Restore table for the -ed / -ing rules: maps a suffix-stripped form to
/// the form that is emitted instead (for example "defin" -> "define").
///
/// Restored forms must be lowercase alphabetic and must not themselves end
/// in a strippable suffix, so a restore always terminates stemming.
class StemExceptions {
 public:
  StemExceptions() = default;
  explicit StemExceptions(std::map<std::string, std::string, std::less<>> table);

  static const StemExceptions& builtin();

  /// One "stripped<TAB>restored" pair per line; '#' comments allowed.
  static StemExceptions parse(std::string_view text);
  static StemExceptions from_file(const std::filesystem::path& path);

  std::optional<std::string_view> restore(std::string_view stripped) const;
  const std::map<std::string, std::string, std::less<>>& table() const { return table_; }

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

/// Maximal runs of ASCII letters, lowercased, in input order. Digits,
/// punctuation, whitespace and non-ASCII bytes all separate tokens.
std::vector<std::string> tokenize(std::string_view raw_text);

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const StopwordList& stoplist);

/// Rule-based suffix stripping. One pass tries, longest suffix first:
///
///   -sses -> -ss            (length > 4)
///   -ies  -> -y             (length > 4)
///   -ing  -> strip          (stem has a vowel and >= 3 letters, or is in the restore table)
///   -ed   -> strip          (same condition; words ending in -eed are left alone)
///   -s    -> strip          (length > 3; not after s, u or i)
///
/// and the first rule whose condition holds is applied. After an -ing / -ed
/// strip the restore table is consulted. Passes repeat until nothing changes,
/// which makes stem idempotent.
std::string stem(std::string_view token,
                 const StemExceptions& exceptions = StemExceptions::builtin());

struct TermFrequencies {
  TermCounts counts;
  std::size_t total = 0;
};

TermFrequencies term_frequencies(std::span<const std::string> tokens);

/// tokenize -> remove_stopwords -> stem -> count, with a fixed stopword list
/// and restore table.
class TextPipeline {
 public:
  TextPipeline();
  TextPipeline(StopwordList stopwords, StemExceptions exceptions);

  /// Kept, stemmed terms of a text in order (with repetition).
  std::vector<std::string> terms(std::string_view text) const;

  Document make_document(std::string id, std::optional<std::string> label,
                         std::string raw_text) const;

  const StopwordList& stopwords() const { return stopwords_; }
  const StemExceptions& exceptions() const { return exceptions_; }

 private:
  StopwordList stopwords_;
  StemExceptions exceptions_;
};

namespace detail {
std::span<const std::string_view> builtin_stopwords();
std::span<const std::pair<std::string_view, std::string_view>> builtin_stem_exceptions();
}  // namespace detail

}  // namespace docclust
