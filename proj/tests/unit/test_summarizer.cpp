#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "docclust/summarizer.hpp"
#include "expect_error.hpp"
#include "summary_fixture.hpp"

namespace docclust {
namespace {

using testing::expect_code;
using Indices = std::vector<std::size_t>;

std::vector<std::string> texts_of(const std::vector<Sentence>& sentences) {
  std::vector<std::string> out;
  for (const auto& s : sentences) out.push_back(s.text);
  return out;
}

Indices indices_of(const Summary& summary) {
  Indices out;
  for (const auto& s : summary.sentences) out.push_back(s.index);
  return out;
}

struct Fixture {
  TextPipeline pipeline;
  std::vector<Document> docs;
  Vocabulary vocab;
  TermDocumentMatrix matrix;

  explicit Fixture(WeightingScheme scheme = WeightingScheme::TfRatio) {
    const auto& cases = testing::summary_fixture();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      docs.push_back(pipeline.make_document("doc" + std::to_string(i), std::nullopt,
                                            cases[i].text));
    }
    vocab = build_vocabulary(docs);
    matrix = build_matrix(docs, vocab, scheme);
  }
};

TEST(Split, Basic) {
  EXPECT_EQ(texts_of(split_sentences("A b. C d.")), (std::vector<std::string>{"A b.", "C d."}));
  EXPECT_TRUE(split_sentences("").empty());
  EXPECT_TRUE(split_sentences("   \n ").empty());
}

TEST(Split, KeepsPunctuationAndIndices) {
  const auto s = split_sentences("  Why?  Because!\nDone. ", "x");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].text, "Why?");
  EXPECT_EQ(s[1].text, "Because!");
  EXPECT_EQ(s[2].text, "Done.");
  EXPECT_EQ(s[2].index, 2u);
  EXPECT_EQ(s[0].doc_id, "x");
}

TEST(Split, NoSplitInsideTokens) {
  const auto s = split_sentences("Version 1.5 shipped. e.g.this stays");
  EXPECT_EQ(texts_of(s), (std::vector<std::string>{"Version 1.5 shipped.", "e.g.this stays"}));
}

TEST(Split, SportFixtureHasTwoSentences) {
  std::ifstream in(std::string(DOCCLUST_FIXTURE_DIR) + "/sport.txt");
  std::ostringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(split_sentences(ss.str()).size(), 2u);
}

TEST(Score, EdgeCases) {
  const Fixture f;
  const auto row = f.matrix.row(4);
  EXPECT_EQ(score_sentence("The and of.", row, f.vocab, f.pipeline), 0.0);
  const std::size_t lava = *f.vocab.index_of("lava");
  EXPECT_EQ(score_sentence("Lava.", row, f.vocab, f.pipeline), f.matrix.at(4, lava));
  EXPECT_EQ(score_sentence("Kiwi.", row, f.vocab, f.pipeline), 0.0);
}

TEST(Score, FixtureScoresMatchHandValues) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  const auto& cases = testing::summary_fixture();
  for (std::size_t d = 0; d < cases.size(); ++d) {
    const auto scored = summarizer.scored_sentences(f.docs[d]);
    ASSERT_EQ(scored.size(), cases[d].scores.size()) << d;
    for (std::size_t i = 0; i < scored.size(); ++i) {
      EXPECT_NEAR(scored[i].score, cases[d].scores[i], 1e-12) << d << ":" << i;
    }
  }
}

TEST(Score, SumModeFavoursLongSentences) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline, ScoreMode::Sum);
  const auto scored = summarizer.scored_sentences(f.docs[6]);
  EXPECT_NEAR(scored[1].score, 11.0 / 9.0, 1e-12);
  EXPECT_EQ(indices_of(summarizer.summarize_document(f.docs[6], 1)), (Indices{1}));
}

TEST(SummarizeDocument, TopTwoMatchesHandSelection) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  const auto& cases = testing::summary_fixture();
  for (std::size_t d = 0; d < cases.size(); ++d) {
    const auto summary = summarizer.summarize_document(f.docs[d], 2);
    EXPECT_EQ(indices_of(summary), cases[d].top_two) << d;
    EXPECT_EQ(summary.n_requested, 2u);
    EXPECT_EQ(summary.scope, SummaryScope::Document);
  }
}

TEST(SummarizeDocument, TiesPreferEarlierSentence) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  EXPECT_EQ(indices_of(summarizer.summarize_document(f.docs[3], 1)), (Indices{0}));
  EXPECT_EQ(indices_of(summarizer.summarize_document(f.docs[8], 1)), (Indices{1}));
}

TEST(SummarizeDocument, NestingAndIdentity) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  for (const auto& doc : f.docs) {
    const std::size_t count = split_sentences(doc.raw_text).size();
    Indices previous;
    for (std::size_t n = 1; n <= count + 1; ++n) {
      const Indices current = indices_of(summarizer.summarize_document(doc, n));
      EXPECT_EQ(current.size(), std::min(n, count));
      EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = current;
    }
    Indices all(count);
    std::iota(all.begin(), all.end(), std::size_t{0});
    EXPECT_EQ(previous, all);
  }
}

TEST(SummarizeDocument, Errors) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  expect_code(ErrorCode::InvalidArgument, [&] { summarizer.summarize_document(f.docs[0], 0); });
  Document stranger = f.docs[0];
  stranger.id = "elsewhere";
  expect_code(ErrorCode::InvalidArgument, [&] { summarizer.summarize_document(stranger, 1); });
}

TEST(SummarizeCluster, Composition) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);

  const Indices single{5};
  EXPECT_EQ(summarizer.summarize_cluster(f.docs, single, 2).sentences,
            summarizer.summarize_document(f.docs[5], 2).sentences);

  const Indices three{7, 1, 4};
  EXPECT_EQ(summarizer.summarize_cluster(f.docs, three, 1).sentences.size(), 3u);

  const Indices members{9, 2, 0, 6};
  const auto cluster = summarizer.summarize_cluster(f.docs, members, 2);
  std::vector<Sentence> expected;
  for (std::size_t d : {0, 2, 6, 9}) {
    for (const auto& s : summarizer.summarize_document(f.docs[d], 2).sentences) {
      expected.push_back(s);
    }
  }
  EXPECT_EQ(cluster.sentences, expected);
  EXPECT_EQ(cluster.scope, SummaryScope::Cluster);
  expect_code(ErrorCode::InvalidArgument,
              [&] { summarizer.summarize_cluster(f.docs, Indices{}, 1); });
}

TEST(SummaryFormats, TextAndJson) {
  const Fixture f;
  const Summarizer summarizer(f.matrix, f.vocab, f.pipeline);
  const Indices members{0, 5};
  const auto summary = summarizer.summarize_cluster(f.docs, members, 1);
  EXPECT_EQ(summary_to_text(summary),
            "== doc0 ==\nAlpha alpha beta.\n\n== doc5 ==\nSolo piano tune.\n");
  auto back = summary_from_json(summary_to_json(summary));
  back.n_requested = summary.n_requested;
  EXPECT_EQ(back, summary);
  expect_code(ErrorCode::ParseError, [] { summary_from_json("{\"scope\":\"page\",\"items\":[]}"); });
  expect_code(ErrorCode::ParseError, [] { summary_from_json("not json"); });
}

}  // namespace
}  // namespace docclust
