#include <json.hpp>

#include "docclust/error.hpp"
#include "docclust/report.hpp"

namespace docclust {

ClusteringReport make_report(const Clustering& clustering, const DistanceMatrix& distances,
                             std::span<const std::string> row_ids, WeightingScheme scheme,
                             std::uint64_t seed) {
  if (row_ids.size() != clustering.assignment.size()) {
    throw Error(ErrorCode::DimensionMismatch, "row ids do not match clustering size");
  }
  ClusteringReport report;
  report.scheme = std::string(scheme_name(scheme));
  report.k = clustering.k();
  report.seed = seed;
  report.total_cost = clustering.total_cost;
  report.iterations = clustering.iterations;
  report.converged = clustering.converged;
  for (std::size_t c = 0; c < clustering.k(); ++c) {
    const std::size_t medoid = clustering.medoids[c];
    ClusterReportEntry entry;
    entry.medoid = row_ids[medoid];
    for (std::size_t r : clustering.members(c)) {
      entry.members.push_back(row_ids[r]);
      entry.intra_cost += distances(r, medoid);
    }
    report.medoids.push_back(entry.medoid);
    report.clusters.push_back(std::move(entry));
  }
  return report;
}

std::string report_to_json(const ClusteringReport& report) {
  nlohmann::ordered_json j;
  j["scheme"] = report.scheme;
  j["k"] = report.k;
  j["seed"] = report.seed;
  j["medoids"] = report.medoids;
  auto clusters = nlohmann::ordered_json::array();
  for (const auto& c : report.clusters) {
    nlohmann::ordered_json entry;
    entry["medoid"] = c.medoid;
    entry["members"] = c.members;
    entry["intra_cost"] = c.intra_cost;
    clusters.push_back(std::move(entry));
  }
  j["clusters"] = std::move(clusters);
  j["total_cost"] = report.total_cost;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

ClusteringReport report_from_json(std::string_view json) {
  try {
    const auto j = nlohmann::json::parse(json);
    ClusteringReport report;
    report.scheme = j.at("scheme").get<std::string>();
    report.k = j.at("k").get<std::size_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.medoids = j.at("medoids").get<std::vector<std::string>>();
    for (const auto& c : j.at("clusters")) {
      ClusterReportEntry entry;
      entry.medoid = c.at("medoid").get<std::string>();
      entry.members = c.at("members").get<std::vector<std::string>>();
      entry.intra_cost = c.at("intra_cost").get<double>();
      report.clusters.push_back(std::move(entry));
    }
    report.total_cost = j.at("total_cost").get<double>();
    report.iterations = j.at("iterations").get<std::size_t>();
    report.converged = j.at("converged").get<bool>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("clustering report: ") + e.what());
  }
}

}  // namespace docclust
