#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docclust/kmedoids.hpp"
#include "docclust/text_pipeline.hpp"
#include "docclust/vector_space.hpp"

namespace docclust {

/// Percentage of cluster members whose label equals the medoid's label.
/// Full precision; round with format_efficiency for display.
///
/// Throws Error(InvalidArgument) for an empty cluster and
/// Error(UnlabeledDocument) when any member has no label.
double cluster_efficiency(LabelView member_labels, std::string_view medoid_label);

/// Half-up rounding to two decimals, e.g. 18.6046... -> "18.60".
std::string format_efficiency(double percent);

struct ObservationRow {
  std::size_t cluster_no = 0;
  std::size_t doc_count = 0;
  std::size_t matching = 0;  // members sharing the medoid's label
  double efficiency_percent = 0.0;
};

/// Per-cluster size and efficiency, one row per cluster in medoid order.
struct ObservationTable {
  std::vector<ObservationRow> rows;
  std::size_t corpus_size = 0;
  WeightingScheme scheme = WeightingScheme::TfRatio;
  std::size_t k = 0;

  /// Sum over rows of doc_count * efficiency / corpus_size, which is the
  /// overall share of documents matching their medoid's label.
  double weighted_mean_efficiency() const;
};

/// Throws Error(UnlabeledDocument) if any document lacks a label.
ObservationTable observation_table(const Clustering& clustering, LabelView labels,
                                   WeightingScheme scheme);

/// Aligned plain text with the columns CLUSTER No / No of DOCUMENTS / EFFICIENCY.
std::string table_to_text(const ObservationTable& table);
/// "cluster_no,doc_count,efficiency_percent", efficiencies at two decimals.
std::string table_to_csv(const ObservationTable& table);
/// Reads table_to_csv output back; efficiencies keep their two decimals and
/// `matching` is left at zero. Throws Error(ParseError).
ObservationTable table_from_csv(std::string_view csv, WeightingScheme scheme);

struct SchemeComparison {
  Clustering tf_clustering;
  Clustering tfidf_clustering;
  ObservationTable tf_table;
  ObservationTable tfidf_table;
  double tf_mean = 0.0;
  double tfidf_mean = 0.0;
  double delta = 0.0;  // tfidf_mean - tf_mean, in percentage points
};

/// Clusters the same labeled corpus under both weighting schemes with the
/// same options (k, init, seed) and compares their observation tables.
SchemeComparison compare_schemes(std::span<const Document> documents,
                                 const ClusterOptions& options,
                                 DistanceMetric metric = DistanceMetric::Manhattan);

std::string comparison_to_json(const SchemeComparison& comparison);

/// Labels of `documents` in order.
std::vector<std::optional<std::string>> labels_of(std::span<const Document> documents);

}  // namespace docclust
