#include "docclust/text_pipeline.hpp"

#include <algorithm>

#include "docclust/error.hpp"
#include "io_util.hpp"

namespace docclust {

namespace {

constexpr bool is_ascii_alpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

constexpr char ascii_lower(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string lowercase(std::string_view word) {
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
  return out;
}

bool is_lower_alpha(std::string_view word) {
  return !word.empty() &&
         std::all_of(word.begin(), word.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool has_vowel(std::string_view word) {
  return word.find_first_of("aeiouy") != std::string_view::npos;
}

bool ends_with(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() && word.substr(word.size() - suffix.size()) == suffix;
}

// -ing / -ed strip; nullopt when the remaining stem is too short or vowel-less.
std::optional<std::string> strip_verbal(std::string_view word, std::size_t suffix_len,
                                        const StemExceptions& exceptions) {
  const std::string_view base = word.substr(0, word.size() - suffix_len);
  if (auto restored = exceptions.restore(base)) {
    return std::string(*restored);
  }
  if (base.size() >= 3 && has_vowel(base)) {
    return std::string(base);
  }
  return std::nullopt;
}

// One pass of the rule table; nullopt when no rule applies.
std::optional<std::string> stem_once(std::string_view word, const StemExceptions& exceptions) {
  const std::size_t n = word.size();
  if (ends_with(word, "sses") && n > 4) {
    return std::string(word.substr(0, n - 2));
  }
  if (ends_with(word, "ies") && n > 4) {
    return std::string(word.substr(0, n - 3)) + "y";
  }
  if (ends_with(word, "ing")) {
    if (auto s = strip_verbal(word, 3, exceptions)) return s;
  }
  if (ends_with(word, "ed") && !ends_with(word, "eed")) {
    if (auto s = strip_verbal(word, 2, exceptions)) return s;
  }
  if (ends_with(word, "s") && n > 3 && !ends_with(word, "ss") && !ends_with(word, "us") &&
      !ends_with(word, "is")) {
    return std::string(word.substr(0, n - 1));
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

StopwordList::StopwordList(std::set<std::string, std::less<>> words, std::string source)
    : source_(std::move(source)) {
  for (const auto& w : words) {
    std::string lw = lowercase(detail::trim(w));
    if (!lw.empty()) words_.insert(std::move(lw));
  }
}

const StopwordList& StopwordList::builtin() {
  static const StopwordList list = [] {
    std::set<std::string, std::less<>> words;
    for (std::string_view w : detail::builtin_stopwords()) words.emplace(w);
    return StopwordList(std::move(words), "builtin");
  }();
  return list;
}

StopwordList StopwordList::parse(std::string_view text, std::string source) {
  std::set<std::string, std::less<>> words;
  for (std::string_view line : detail::split_lines(text)) {
    line = detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    words.emplace(line);
  }
  return StopwordList(std::move(words), std::move(source));
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  return parse(detail::read_text_file(path), path.string());
}

bool StopwordList::contains(std::string_view word) const {
  if (std::any_of(word.begin(), word.end(), [](char c) { return c >= 'A' && c <= 'Z'; })) {
    return words_.contains(lowercase(word));
  }
  return words_.contains(word);
}

// ---------------------------------------------------------------------------

StemExceptions::StemExceptions(std::map<std::string, std::string, std::less<>> table)
    : table_(std::move(table)) {
  const StemExceptions empty;
  for (const auto& [stripped, restored] : table_) {
    if (!is_lower_alpha(stripped) || !is_lower_alpha(restored)) {
      throw Error(ErrorCode::ParseError,
                  "stem exception entries must be lowercase alphabetic: '" + stripped + "' -> '" +
                      restored + "'");
    }
    if (stem_once(restored, empty).has_value() ||
        (ends_with(restored, "ing") || (ends_with(restored, "ed") && !ends_with(restored, "eed")))) {
      throw Error(ErrorCode::ParseError,
                  "restored form '" + restored + "' would be stemmed again");
    }
  }
}

const StemExceptions& StemExceptions::builtin() {
  static const StemExceptions table = [] {
    std::map<std::string, std::string, std::less<>> entries;
    for (auto [stripped, restored] : detail::builtin_stem_exceptions()) {
      entries.emplace(stripped, restored);
    }
    return StemExceptions(std::move(entries));
  }();
  return table;
}

StemExceptions StemExceptions::parse(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw Error(ErrorCode::ParseError,
                  "stem exception line " + std::to_string(line_no) + " has no TAB separator");
    }
    entries.insert_or_assign(std::string(detail::trim(line.substr(0, tab))),
                             std::string(detail::trim(line.substr(tab + 1))));
  }
  return StemExceptions(std::move(entries));
}

StemExceptions StemExceptions::from_file(const std::filesystem::path& path) {
  return parse(detail::read_text_file(path));
}

std::optional<std::string_view> StemExceptions::restore(std::string_view stripped) const {
  auto it = table_.find(stripped);
  if (it == table_.end()) return std::nullopt;
  return std::string_view(it->second);
}

// ---------------------------------------------------------------------------

std::vector<std::string> tokenize(std::string_view raw_text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : raw_text) {
    if (is_ascii_alpha(c)) {
      current += ascii_lower(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> remove_stopwords(std::span<const std::string> tokens,
                                          const StopwordList& stoplist) {
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) kept.push_back(t);
  }
  return kept;
}

std::string stem(std::string_view token, const StemExceptions& exceptions) {
  std::string word(token);
  // Every pass either shortens the word or ends on a restored form, which
  // the StemExceptions constructor guarantees is a fixed point.
  while (auto next = stem_once(word, exceptions)) {
    if (*next == word) break;
    word = std::move(*next);
  }
  return word;
}

TermFrequencies term_frequencies(std::span<const std::string> tokens) {
  TermFrequencies tf;
  for (const auto& t : tokens) {
    auto it = tf.counts.find(t);
    if (it == tf.counts.end()) {
      tf.counts.emplace(t, 1);
    } else {
      ++it->second;
    }
  }
  tf.total = tokens.size();
  return tf;
}

// ---------------------------------------------------------------------------

TextPipeline::TextPipeline() : TextPipeline(StopwordList::builtin(), StemExceptions::builtin()) {}

TextPipeline::TextPipeline(StopwordList stopwords, StemExceptions exceptions)
    : stopwords_(std::move(stopwords)), exceptions_(std::move(exceptions)) {}

std::vector<std::string> TextPipeline::terms(std::string_view text) const {
  std::vector<std::string> kept = remove_stopwords(tokenize(text), stopwords_);
  for (auto& t : kept) t = stem(t, exceptions_);
  return kept;
}

Document TextPipeline::make_document(std::string id, std::optional<std::string> label,
                                     std::string raw_text) const {
  Document doc;
  doc.id = std::move(id);
  doc.label = std::move(label);
  doc.raw_text = std::move(raw_text);
  auto tf = term_frequencies(terms(doc.raw_text));
  doc.term_counts = std::move(tf.counts);
  doc.kept_token_total = tf.total;
  return doc;
}

}  // namespace docclust
