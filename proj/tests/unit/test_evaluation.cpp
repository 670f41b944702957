#include <gtest/gtest.h>

#include <json.hpp>

#include "docclust/evaluation.hpp"
#include "expect_error.hpp"
#include "synthetic_corpus.hpp"

namespace docclust {
namespace {

using testing::expect_code;
using Labels = std::vector<std::optional<std::string>>;

Labels cluster_labels(std::size_t size, std::size_t matching) {
  Labels labels(size, std::string("other"));
  for (std::size_t i = 0; i < matching; ++i) labels[i] = "medoid";
  return labels;
}

TEST(Efficiency, ReferenceRows) {
  EXPECT_EQ(format_efficiency(cluster_efficiency(cluster_labels(43, 8), "medoid")), "18.60");
  const double row2 = cluster_efficiency(cluster_labels(7, 3), "medoid");
  EXPECT_NEAR(row2, 42.85, 0.02);
  EXPECT_EQ(format_efficiency(row2), "42.86");
  EXPECT_EQ(format_efficiency(cluster_efficiency(cluster_labels(4, 2), "medoid")), "50.00");
}

TEST(Efficiency, SingletonIsFull) {
  EXPECT_EQ(cluster_efficiency(cluster_labels(1, 1), "medoid"), 100.0);
}

TEST(Efficiency, Errors) {
  expect_code(ErrorCode::InvalidArgument, [] { cluster_efficiency(Labels{}, "x"); });
  const Labels partial{std::string("x"), std::nullopt};
  expect_code(ErrorCode::UnlabeledDocument, [&] { cluster_efficiency(partial, "x"); });
}

TEST(Efficiency, FormatRoundsHalfUp) {
  EXPECT_EQ(format_efficiency(12.345), "12.35");
  EXPECT_EQ(format_efficiency(0.0), "0.00");
  EXPECT_EQ(format_efficiency(100.0), "100.00");
  EXPECT_EQ(format_efficiency(100.0 / 3.0), "33.33");
  EXPECT_EQ(format_efficiency(200.0 / 3.0), "66.67");
}

Clustering one_cluster(std::size_t n) {
  Clustering c;
  c.medoids = {0};
  c.assignment.assign(n, 0);
  return c;
}

TEST(Table, SingleClusterSameLabel) {
  const Labels labels(10, std::string("sport"));
  const auto table = observation_table(one_cluster(10), labels, WeightingScheme::TfRatio);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_EQ(table.rows[0].doc_count, 10u);
  EXPECT_EQ(table.rows[0].matching, 10u);
  EXPECT_EQ(table.rows[0].efficiency_percent, 100.0);
  EXPECT_EQ(table.weighted_mean_efficiency(), 100.0);
}

TEST(Table, UnlabeledDocumentRejected) {
  Labels labels(3, std::string("a"));
  labels[2].reset();
  expect_code(ErrorCode::UnlabeledDocument,
              [&] { observation_table(one_cluster(3), labels, WeightingScheme::TfRatio); });
}

TEST(Table, DisjointDomainsAreFullyPure) {
  // Five domains with no shared terms: any two documents of one domain share
  // terms while documents of different domains share none.
  std::vector<Document> docs;
  for (std::size_t d = 0; d < 5; ++d) {
    for (std::size_t i = 0; i < 5; ++i) {
      Document doc;
      doc.id = "d" + std::to_string(d) + "_" + std::to_string(i);
      doc.label = "label" + std::to_string(d);
      for (std::size_t t = 0; t < 6; ++t) {
        const std::size_t c = 1 + (t + i) % 3;
        doc.term_counts.emplace(testing::pseudo_word(d, t), c);
        doc.kept_token_total += c;
      }
      docs.push_back(std::move(doc));
    }
  }
  const auto m = build_matrix(docs, build_vocabulary(docs), WeightingScheme::TfRatio);
  const auto dist = DistanceMatrix::build(m);
  double max_within = 0.0, min_across = 1e9;
  for (std::size_t a = 0; a < 25; ++a) {
    for (std::size_t b = a + 1; b < 25; ++b) {
      if (a / 5 == b / 5) {
        max_within = std::max(max_within, dist(a, b));
      } else {
        min_across = std::min(min_across, dist(a, b));
      }
    }
  }
  ASSERT_LT(max_within, min_across);

  const auto labels = labels_of(docs);
  for (InitKind kind : {InitKind::LabelStratified, InitKind::RandomSeeded}) {
    ClusterOptions opts;
    opts.init.kind = kind;
    const auto c = cluster(dist, opts, LabelView(labels));
    const auto table = observation_table(c, labels, WeightingScheme::TfRatio);
    std::size_t total = 0;
    for (const auto& row : table.rows) {
      total += row.doc_count;
      if (kind == InitKind::LabelStratified) EXPECT_EQ(row.efficiency_percent, 100.0);
    }
    EXPECT_EQ(total, 25u);
  }
}

ObservationTable sample_table() {
  ObservationTable t;
  t.corpus_size = 54;
  t.k = 3;
  t.rows = {{0, 43, 8, 800.0 / 43.0}, {1, 7, 3, 300.0 / 7.0}, {2, 4, 2, 50.0}};
  return t;
}

TEST(Table, WeightedMeanIsOverallMatchShare) {
  EXPECT_NEAR(sample_table().weighted_mean_efficiency(), 100.0 * 13.0 / 54.0, 1e-12);
}

TEST(Table, TextLayout) {
  const std::string text = table_to_text(sample_table());
  EXPECT_EQ(text,
            "CLUSTER No   No of DOCUMENTS   EFFICIENCY\n"
            "0            43                18.60%\n"
            "1            7                 42.86%\n"
            "2            4                 50.00%\n");
}

TEST(Table, CsvRoundTrip) {
  const std::string csv = table_to_csv(sample_table());
  EXPECT_EQ(csv,
            "cluster_no,doc_count,efficiency_percent\n"
            "0,43,18.60\n1,7,42.86\n2,4,50.00\n");
  const auto back = table_from_csv(csv, WeightingScheme::TfIdf);
  ASSERT_EQ(back.rows.size(), 3u);
  EXPECT_EQ(back.rows[1].doc_count, 7u);
  EXPECT_EQ(back.rows[1].efficiency_percent, 42.86);
  EXPECT_EQ(back.corpus_size, 54u);
  EXPECT_EQ(back.k, 3u);
  EXPECT_EQ(table_to_csv(back), csv);
  expect_code(ErrorCode::ParseError,
              [] { table_from_csv("a,b,c\n", WeightingScheme::TfRatio); });
  expect_code(ErrorCode::ParseError, [] {
    table_from_csv("cluster_no,doc_count,efficiency_percent\n0,x,1\n", WeightingScheme::TfRatio);
  });
}

bool same_rows(const ObservationTable& a, const ObservationTable& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].doc_count != b.rows[i].doc_count ||
        a.rows[i].matching != b.rows[i].matching ||
        a.rows[i].efficiency_percent != b.rows[i].efficiency_percent) {
      return false;
    }
  }
  return true;
}

TEST(CompareSchemes, EqualDfGivesIdenticalTables) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto docs = testing::equal_df_corpus(5, seed);
    ClusterOptions opts;
    opts.init.seed = seed;
    const auto cmp = compare_schemes(docs, opts);
    EXPECT_TRUE(same_rows(cmp.tf_table, cmp.tfidf_table)) << seed;
    EXPECT_EQ(cmp.tf_clustering.medoids, cmp.tfidf_clustering.medoids);
    EXPECT_EQ(cmp.tf_clustering.assignment, cmp.tfidf_clustering.assignment);
    EXPECT_EQ(cmp.delta, 0.0);
    EXPECT_NEAR(cmp.tfidf_clustering.total_cost,
                cmp.tf_clustering.total_cost * std::log(10.0),
                1e-9 * cmp.tfidf_clustering.total_cost);
  }
}

TEST(CompareSchemes, SyntheticCorpusReportsDelta) {
  const TextPipeline pipeline;
  const auto docs = testing::to_documents(testing::make_synthetic_texts({}), pipeline);
  ClusterOptions opts;
  opts.init.kind = InitKind::LabelStratified;
  const auto cmp = compare_schemes(docs, opts);
  for (const auto* table : {&cmp.tf_table, &cmp.tfidf_table}) {
    std::size_t total = 0;
    for (const auto& row : table->rows) total += row.doc_count;
    EXPECT_EQ(total, docs.size());
  }
  EXPECT_DOUBLE_EQ(cmp.delta, cmp.tfidf_mean - cmp.tf_mean);

  const auto j = nlohmann::json::parse(comparison_to_json(cmp));
  EXPECT_DOUBLE_EQ(j.at("delta_tfidf_minus_tf").get<double>(), cmp.delta);
  EXPECT_EQ(j.at("tf").at("rows").size(), 5u);
  EXPECT_EQ(j.at("tfidf").at("rows").size(), 5u);
}

TEST(CompareSchemes, RequiresLabels) {
  auto docs = testing::equal_df_corpus(2, 1);
  docs[3].label.reset();
  ClusterOptions opts;
  opts.k = 2;
  expect_code(ErrorCode::UnlabeledDocument, [&] { compare_schemes(docs, opts); });
}

}  // namespace
}  // namespace docclust
