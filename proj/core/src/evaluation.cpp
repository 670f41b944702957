#include "docclust/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "docclust/error.hpp"
#include "io_util.hpp"

namespace docclust {

double cluster_efficiency(LabelView member_labels, std::string_view medoid_label) {
  if (member_labels.empty()) {
    throw Error(ErrorCode::InvalidArgument, "efficiency of an empty cluster is undefined");
  }
  std::size_t matching = 0;
  for (const auto& label : member_labels) {
    if (!label) throw Error(ErrorCode::UnlabeledDocument, "cluster member has no label");
    if (*label == medoid_label) ++matching;
  }
  return 100.0 * static_cast<double>(matching) / static_cast<double>(member_labels.size());
}

std::string format_efficiency(double percent) { return detail::format_percent(percent); }

double ObservationTable::weighted_mean_efficiency() const {
  if (corpus_size == 0) return 0.0;
  double sum = 0.0;
  for (const auto& row : rows) sum += static_cast<double>(row.doc_count) * row.efficiency_percent;
  return sum / static_cast<double>(corpus_size);
}

ObservationTable observation_table(const Clustering& clustering, LabelView labels,
                                   WeightingScheme scheme) {
  if (labels.size() != clustering.assignment.size()) {
    throw Error(ErrorCode::DimensionMismatch, "label count does not match clustering size");
  }
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (!labels[r]) {
      throw Error(ErrorCode::UnlabeledDocument,
                  "document row " + std::to_string(r) + " has no label");
    }
  }
  ObservationTable table;
  table.corpus_size = labels.size();
  table.scheme = scheme;
  table.k = clustering.k();
  for (std::size_t c = 0; c < clustering.k(); ++c) {
    const auto rows = clustering.members(c);
    std::vector<std::optional<std::string>> member_labels;
    member_labels.reserve(rows.size());
    for (std::size_t r : rows) member_labels.push_back(labels[r]);
    const std::string& medoid_label = *labels[clustering.medoids[c]];

    ObservationRow row;
    row.cluster_no = c;
    row.doc_count = rows.size();
    row.matching = static_cast<std::size_t>(
        std::count(member_labels.begin(), member_labels.end(), medoid_label));
    row.efficiency_percent = cluster_efficiency(member_labels, medoid_label);
    table.rows.push_back(row);
  }
  return table;
}

std::string table_to_text(const ObservationTable& table) {
  char line[128];
  std::string out;
  std::snprintf(line, sizeof(line), "%-12s %-17s %s\n", "CLUSTER No", "No of DOCUMENTS",
                "EFFICIENCY");
  out += line;
  for (const auto& row : table.rows) {
    const std::string eff = format_efficiency(row.efficiency_percent) + "%";
    std::snprintf(line, sizeof(line), "%-12zu %-17zu %s\n", row.cluster_no, row.doc_count,
                  eff.c_str());
    out += line;
  }
  return out;
}

std::string table_to_csv(const ObservationTable& table) {
  std::string out = "cluster_no,doc_count,efficiency_percent\n";
  for (const auto& row : table.rows) {
    out += std::to_string(row.cluster_no) + "," + std::to_string(row.doc_count) + "," +
           format_efficiency(row.efficiency_percent) + "\n";
  }
  return out;
}

ObservationTable table_from_csv(std::string_view csv, WeightingScheme scheme) {
  const auto records = detail::parse_csv(csv);
  const std::vector<std::string> header{"cluster_no", "doc_count", "efficiency_percent"};
  if (records.empty() || records.front() != header) {
    throw Error(ErrorCode::ParseError, "observation table CSV has an unexpected header");
  }
  ObservationTable table;
  table.scheme = scheme;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& rec = records[i];
    if (rec.size() != 3) {
      throw Error(ErrorCode::ParseError,
                  "observation table row " + std::to_string(i) + " needs 3 fields");
    }
    ObservationRow row;
    row.cluster_no = detail::parse_size(rec[0]);
    row.doc_count = detail::parse_size(rec[1]);
    row.efficiency_percent = detail::parse_double(rec[2]);
    table.corpus_size += row.doc_count;
    table.rows.push_back(row);
  }
  table.k = table.rows.size();
  return table;
}

std::vector<std::optional<std::string>> labels_of(std::span<const Document> documents) {
  std::vector<std::optional<std::string>> labels;
  labels.reserve(documents.size());
  for (const auto& d : documents) labels.push_back(d.label);
  return labels;
}

SchemeComparison compare_schemes(std::span<const Document> documents,
                                 const ClusterOptions& options, DistanceMetric metric) {
  const auto labels = labels_of(documents);
  const Vocabulary vocab = build_vocabulary(documents);

  auto run_scheme = [&](WeightingScheme scheme, Clustering& clustering, ObservationTable& table) {
    const auto matrix = build_matrix(documents, vocab, scheme, options.threads);
    const auto distances = DistanceMatrix::build(matrix, metric, options.threads);
    clustering = cluster(distances, options, LabelView(labels));
    table = observation_table(clustering, labels, scheme);
  };

  SchemeComparison cmp;
  run_scheme(WeightingScheme::TfRatio, cmp.tf_clustering, cmp.tf_table);
  run_scheme(WeightingScheme::TfIdf, cmp.tfidf_clustering, cmp.tfidf_table);
  cmp.tf_mean = cmp.tf_table.weighted_mean_efficiency();
  cmp.tfidf_mean = cmp.tfidf_table.weighted_mean_efficiency();
  cmp.delta = cmp.tfidf_mean - cmp.tf_mean;
  return cmp;
}

std::string comparison_to_json(const SchemeComparison& comparison) {
  auto table_json = [](const ObservationTable& t) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
      nlohmann::ordered_json row;
      row["cluster_no"] = r.cluster_no;
      row["doc_count"] = r.doc_count;
      row["efficiency_percent"] = detail::parse_double(format_efficiency(r.efficiency_percent));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  nlohmann::ordered_json j;
  j["tf"] = {{"mean_efficiency", comparison.tf_mean},
             {"total_cost", comparison.tf_clustering.total_cost},
             {"rows", table_json(comparison.tf_table)}};
  j["tfidf"] = {{"mean_efficiency", comparison.tfidf_mean},
                {"total_cost", comparison.tfidf_clustering.total_cost},
                {"rows", table_json(comparison.tfidf_table)}};
  j["delta_tfidf_minus_tf"] = comparison.delta;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace docclust
