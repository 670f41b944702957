#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docclust/vector_space.hpp"

namespace docclust {

/// Per-document domain labels, parallel to matrix rows.
using LabelView = std::span<const std::optional<std::string>>;

enum class DistanceMetric {
  Manhattan,
  Euclidean,  // not used by default; available for comparison runs
};

std::string_view metric_name(DistanceMetric metric) noexcept;
std::optional<DistanceMetric> parse_metric(std::string_view name);

/// Sum of absolute coordinate differences. Throws Error(DimensionMismatch).
double manhattan_distance(std::span<const double> x, std::span<const double> y);
double euclidean_distance(std::span<const double> x, std::span<const double> y);

/// Symmetric D x D table of pairwise document distances, computed once so
/// that assignment and swap evaluation never touch the weight grid.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// `values` is row-major n x n; must be symmetric with a zero diagonal.
  DistanceMatrix(std::size_t n, std::vector<double> values);

  static DistanceMatrix build(const TermDocumentMatrix& matrix,
                              DistanceMetric metric = DistanceMetric::Manhattan,
                              unsigned threads = 1);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

enum class InitKind { RandomSeeded, LabelStratified };

std::string_view init_name(InitKind kind) noexcept;
std::optional<InitKind> parse_init(std::string_view name);

struct InitStrategy {
  InitKind kind = InitKind::RandomSeeded;
  std::uint64_t seed = 0;
};

/// Picks k distinct medoid rows, returned in ascending order.
///
/// RandomSeeded draws a partial Fisher-Yates sample from a mt19937_64 seeded
/// with `seed`, so the result depends only on (document_count, k, seed) and
/// is the same on every platform. LabelStratified takes, for each distinct
/// label, the lowest row carrying it; it requires a label on every document
/// and k equal to the number of distinct labels.
///
/// Throws Error(BadK) when k is 0, exceeds document_count, or does not match
/// the label count, and Error(MissingLabels) for stratified init without a
/// complete label set.
std::vector<std::size_t> initialize_medoids(std::size_t document_count, std::size_t k,
                                            const InitStrategy& strategy,
                                            std::optional<LabelView> labels = std::nullopt);

struct Assignment {
  std::vector<std::size_t> medoid_of;  // row -> medoid row
  double total_cost = 0.0;
};

/// Nearest-medoid assignment. Distances within a relative 1e-10 of the
/// minimum count as ties and go to the lowest medoid row index; a medoid row
/// is always assigned to itself. The total sums each row's minimum distance
/// in row order. Throws Error(InvalidArgument) on empty, duplicate or
/// out-of-range medoids.
Assignment assign(const DistanceMatrix& distances, std::span<const std::size_t> medoids);

struct Clustering {
  std::vector<std::size_t> medoids;     // ascending row indices
  std::vector<std::size_t> assignment;  // row -> medoid row
  double total_cost = 0.0;
  double initial_cost = 0.0;            // cost of the initial medoid set
  std::size_t iterations = 0;           // accepted swaps
  bool converged = false;               // false when max_iterations stopped the search
  std::vector<double> cost_trace;       // total cost after init and after each swap

  std::size_t k() const noexcept { return medoids.size(); }
  /// Member rows of the cluster owned by medoids[cluster], ascending.
  std::vector<std::size_t> members(std::size_t cluster) const;
};

struct SwapEvaluation {
  double new_total_cost = 0.0;
  bool accept = false;  // cheaper by more than a relative 1e-10
};

/// Full reassignment cost after replacing `medoid_out` by `candidate_in`.
/// Throws Error(NotAMedoid) / Error(AlreadyMedoid) on misuse.
SwapEvaluation try_swap(const DistanceMatrix& distances, const Clustering& current,
                        std::size_t medoid_out, std::size_t candidate_in);

struct ClusterOptions {
  std::size_t k = 5;
  InitStrategy init;
  /// Cap on accepted swaps; defaults to 10 x document count.
  std::optional<std::size_t> max_iterations;
  unsigned threads = 1;
};

/// Swap-based K-Medoids local search from a given medoid set.
///
/// Each scan visits (medoid, non-medoid) pairs in ascending medoid row, then
/// ascending candidate row, and applies the first swap that lowers the total
/// cost by more than a relative 1e-10, then starts a new scan. Stops when a
/// full scan finds no improving swap (converged) or after `max_iterations`
/// accepted swaps.
/// Results do not depend on `threads`.
Clustering cluster_from(const DistanceMatrix& distances, std::vector<std::size_t> initial_medoids,
                        std::size_t max_iterations, unsigned threads = 1);

/// initialize_medoids followed by cluster_from.
Clustering cluster(const DistanceMatrix& distances, const ClusterOptions& options,
                   std::optional<LabelView> labels = std::nullopt);

/// Convenience overload that builds the Manhattan distance table first.
Clustering cluster(const TermDocumentMatrix& matrix, const ClusterOptions& options,
                   std::optional<LabelView> labels = std::nullopt);

/// Recomputes assignment and cost and checks every Clustering invariant.
/// Throws Error(InvariantViolation) describing the first failure.
void verify_clustering(const DistanceMatrix& distances, const Clustering& clustering);

}  // namespace docclust
