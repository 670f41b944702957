#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docclust/kmedoids.hpp"

namespace docclust {

struct ClusterReportEntry {
  std::string medoid;
  std::vector<std::string> members;
  double intra_cost = 0.0;

  bool operator==(const ClusterReportEntry&) const = default;
};

/// Clustering keyed by document id, as written to clustering.json:
/// {scheme, k, seed, medoids, clusters:[{medoid, members, intra_cost}],
///  total_cost, iterations, converged}
struct ClusteringReport {
  std::string scheme;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> medoids;
  std::vector<ClusterReportEntry> clusters;
  double total_cost = 0.0;
  std::size_t iterations = 0;
  bool converged = false;

  bool operator==(const ClusteringReport&) const = default;
};

ClusteringReport make_report(const Clustering& clustering, const DistanceMatrix& distances,
                             std::span<const std::string> row_ids, WeightingScheme scheme,
                             std::uint64_t seed);

std::string report_to_json(const ClusteringReport& report);
/// Throws Error(ParseError).
ClusteringReport report_from_json(std::string_view json);

}  // namespace docclust
