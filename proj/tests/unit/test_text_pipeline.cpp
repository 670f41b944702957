#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "docclust/error.hpp"
#include "docclust/text_pipeline.hpp"
#include "synthetic_corpus.hpp"

namespace docclust {
namespace {

using Tokens = std::vector<std::string>;

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(DOCCLUST_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Tokenize, DropsDigitsAndLowercases) {
  EXPECT_EQ(tokenize("Salaam Bombay is a 1988 Hindi film"),
            (Tokens{"salaam", "bombay", "is", "a", "hindi", "film"}));
}

TEST(Tokenize, EmptyInput) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, PunctuationSeparates) {
  EXPECT_EQ(tokenize("net. Players score"), (Tokens{"net", "players", "score"}));
  EXPECT_EQ(tokenize("day-to-day (singles)"), (Tokens{"day", "to", "day", "singles"}));
}

TEST(Tokenize, NonAsciiBytesSeparate) {
  EXPECT_EQ(tokenize("Montr\xc3\xa9" "al"), (Tokens{"montr", "al"}));
}

TEST(Stopwords, BuiltinRemovesArticles) {
  const Tokens in{"a", "an", "the", "film"};
  EXPECT_EQ(remove_stopwords(in, StopwordList::builtin()), (Tokens{"film"}));
  const Tokens in2{"how", "when", "badminton"};
  EXPECT_EQ(remove_stopwords(in2, StopwordList::builtin()), (Tokens{"badminton"}));
  EXPECT_TRUE(remove_stopwords(Tokens{}, StopwordList::builtin()).empty());
}

TEST(Stopwords, ContainsIsCaseInsensitive) {
  EXPECT_TRUE(StopwordList::builtin().contains("The"));
  EXPECT_FALSE(StopwordList::builtin().contains("film"));
}

TEST(Stopwords, ParseSkipsCommentsAndBlanks) {
  const auto list = StopwordList::parse("# header\n\nFoo\n  bar  \r\n", "inline");
  EXPECT_EQ(list.words(), (std::set<std::string, std::less<>>{"bar", "foo"}));
  EXPECT_EQ(list.source(), "inline");
}

TEST(Stopwords, MissingFileIsUnreadable) {
  try {
    StopwordList::from_file("/nonexistent/stopwords.txt");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnreadableFile);
  }
}

TEST(BuiltinLists, MatchShippedDataFiles) {
  const auto stop = StopwordList::from_file(std::string(DOCCLUST_DATA_DIR) + "/stopwords.txt");
  EXPECT_EQ(stop.words(), StopwordList::builtin().words());
  const auto exc =
      StemExceptions::from_file(std::string(DOCCLUST_DATA_DIR) + "/stem_exceptions.tsv");
  EXPECT_EQ(exc.table(), StemExceptions::builtin().table());
}

TEST(Stem, Examples) {
  EXPECT_EQ(stem("defined"), "define");
  EXPECT_EQ(stem("film"), "film");
  EXPECT_EQ(stem("players"), "player");
}

TEST(Stem, RuleTable) {
  EXPECT_EQ(stem("classes"), "class");
  EXPECT_EQ(stem("studies"), "study");
  EXPECT_EQ(stem("ties"), "tie");
  EXPECT_EQ(stem("playing"), "play");
  EXPECT_EQ(stem("sing"), "sing");
  EXPECT_EQ(stem("agreed"), "agreed");
  EXPECT_EQ(stem("red"), "red");
  EXPECT_EQ(stem("glass"), "glass");
  EXPECT_EQ(stem("bus"), "bus");
  EXPECT_EQ(stem("campus"), "campus");
  EXPECT_EQ(stem("analysis"), "analysis");
  EXPECT_EQ(stem("gas"), "gas");
}

TEST(Stem, RestoreTable) {
  EXPECT_EQ(stem("divided"), "divide");
  EXPECT_EQ(stem("opposing"), "oppose");
  EXPECT_EQ(stem("striking"), "strike");
  EXPECT_EQ(stem("nominated"), "nominate");
}

TEST(Stem, CustomExceptions) {
  const auto exc = StemExceptions::parse("# c\ncurv\tcurve\n");
  EXPECT_EQ(stem("curved", exc), "curve");
  EXPECT_EQ(stem("defined", exc), "defin");
}

TEST(Stem, RejectsRestoreThatWouldStemAgain) {
  EXPECT_THROW(StemExceptions::parse("walk\twalking\n"), Error);
  EXPECT_THROW(StemExceptions::parse("walk\twalks\n"), Error);
  EXPECT_THROW(StemExceptions::parse("Walk\twalk\n"), Error);
  EXPECT_THROW(StemExceptions::parse("walk walk\n"), Error);
}

TEST(Stem, IdempotentOnRandomWords) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> suffixes{"", "s", "es", "ies", "sses", "ed", "ing",
                                          "eds", "ings", "ied", "ss", "us", "is"};
  std::uniform_int_distribution<int> letter(0, 25);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  std::uniform_int_distribution<std::size_t> suf(0, suffixes.size() - 1);
  for (int i = 0; i < 20000; ++i) {
    std::string w;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) w += static_cast<char>('a' + letter(rng));
    w += suffixes[suf(rng)];
    const std::string once = stem(w);
    ASSERT_EQ(stem(once), once) << w;
    ASSERT_FALSE(once.empty()) << w;
  }
}

TEST(Stem, IdempotentOnBuiltinRestores) {
  for (const auto& [stripped, restored] : StemExceptions::builtin().table()) {
    EXPECT_EQ(stem(restored), restored) << stripped;
  }
}

TEST(TermFrequencies, Counts) {
  const Tokens in{"film", "film", "award"};
  const auto tf = term_frequencies(in);
  EXPECT_EQ(tf.counts, (TermCounts{{"award", 1}, {"film", 2}}));
  EXPECT_EQ(tf.total, 3u);
  const auto empty = term_frequencies(Tokens{});
  EXPECT_TRUE(empty.counts.empty());
  EXPECT_EQ(empty.total, 0u);
}

// Counts worked out by hand from the fixture text.
TEST(Pipeline, SportExcerpt) {
  const TextPipeline pipeline;
  const Document doc = pipeline.make_document("sport", "sport", read_fixture("sport.txt"));
  EXPECT_EQ(doc.kept_token_total, 32u);
  const TermCounts expected{
      {"badminton", 1}, {"court", 2},   {"divide", 1},     {"double", 1},   {"half", 1},
      {"halve", 1},     {"land", 1},    {"net", 2},        {"opponent", 1}, {"oppose", 2},
      {"opposite", 1},  {"pair", 1},    {"pass", 1},       {"play", 1},     {"player", 2},
      {"point", 1},     {"position", 1}, {"racquet", 2},   {"rectangular", 1},
      {"score", 1},     {"shuttlecock", 1}, {"single", 1}, {"sport", 1},    {"strike", 1},
      {"take", 1},      {"two", 2}};
  EXPECT_EQ(doc.term_counts, expected);
  std::size_t sum = 0;
  for (const auto& [term, count] : doc.term_counts) sum += count;
  EXPECT_EQ(sum, doc.kept_token_total);
}

TEST(Pipeline, EntertainmentFilmCount) {
  const TextPipeline pipeline;
  const Document doc = pipeline.make_document("ent", std::nullopt,
                                              read_fixture("entertainment.txt"));
  EXPECT_EQ(doc.kept_token_total, 64u);
  EXPECT_EQ(doc.term_counts.at("film"), 10u);
  EXPECT_EQ(doc.term_counts.count("montr"), 1u);
  EXPECT_EQ(doc.term_counts.count("s"), 0u);
}

TEST(Pipeline, DocumentInvariantsOnSyntheticText) {
  const TextPipeline pipeline;
  testing::SyntheticSpec spec;
  spec.docs_per_domain = 2;
  for (const auto& doc : testing::to_documents(testing::make_synthetic_texts(spec), pipeline)) {
    std::size_t sum = 0;
    for (const auto& [term, count] : doc.term_counts) {
      EXPECT_FALSE(pipeline.stopwords().contains(term));
      EXPECT_EQ(stem(term), term);
      sum += count;
    }
    EXPECT_EQ(sum, doc.kept_token_total);
  }
}

TEST(Pipeline, AllStopwordsGiveEmptyDocument) {
  const Document doc = TextPipeline().make_document("x", std::nullopt, "The and of a.");
  EXPECT_TRUE(doc.term_counts.empty());
  EXPECT_EQ(doc.kept_token_total, 0u);
}

}  // namespace
}  // namespace docclust
