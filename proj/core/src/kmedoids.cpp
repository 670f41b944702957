#include "docclust/kmedoids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "docclust/error.hpp"
#include "parallel.hpp"

namespace docclust {

std::string_view metric_name(DistanceMetric metric) noexcept {
  return metric == DistanceMetric::Euclidean ? "euclidean" : "manhattan";
}

std::optional<DistanceMetric> parse_metric(std::string_view name) {
  if (name == "manhattan") return DistanceMetric::Manhattan;
  if (name == "euclidean") return DistanceMetric::Euclidean;
  return std::nullopt;
}

std::string_view init_name(InitKind kind) noexcept {
  return kind == InitKind::LabelStratified ? "stratified" : "random";
}

std::optional<InitKind> parse_init(std::string_view name) {
  if (name == "random") return InitKind::RandomSeeded;
  if (name == "stratified") return InitKind::LabelStratified;
  return std::nullopt;
}

namespace {

// Values this close (relative) are treated as equal when comparing costs and
// distances, so that rounding noise in sums of equal terms cannot decide a
// swap or a tie. Relative, so scaling every weight leaves decisions intact.
constexpr double kRelativeTolerance = 1e-10;

bool clearly_less(double a, double b) {
  return a < b - kRelativeTolerance * std::max(std::abs(a), std::abs(b));
}

void check_dimensions(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors of length " + std::to_string(x.size()) +
                                                  " and " + std::to_string(y.size()));
  }
}

void check_medoid_set(std::size_t n, std::span<const std::size_t> medoids) {
  if (medoids.empty()) {
    throw Error(ErrorCode::InvalidArgument, "medoid set is empty");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t m : medoids) {
    if (m >= n) {
      throw Error(ErrorCode::InvalidArgument,
                  "medoid row " + std::to_string(m) + " out of range for " + std::to_string(n) +
                      " documents");
    }
    if (seen[m]) {
      throw Error(ErrorCode::InvalidArgument, "duplicate medoid row " + std::to_string(m));
    }
    seen[m] = true;
  }
}

// Nearest and second-nearest medoid distance for every row under one medoid
// set. A swap (out -> in) then costs O(D) to evaluate: rows whose nearest
// medoid is `out` fall back to their second-nearest, all others keep their
// nearest, and each is finally compared against the distance to `in`.
struct NearestCache {
  std::vector<std::size_t> nearest;
  std::vector<double> nearest_d;
  std::vector<double> second_d;

  NearestCache(const DistanceMatrix& dist, std::span<const std::size_t> sorted_medoids) {
    const std::size_t n = dist.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    nearest.assign(n, 0);
    nearest_d.assign(n, inf);
    second_d.assign(n, inf);
    for (std::size_t o = 0; o < n; ++o) {
      for (std::size_t m : sorted_medoids) {
        const double d = dist(o, m);
        if (d < nearest_d[o]) {
          second_d[o] = nearest_d[o];
          nearest_d[o] = d;
          nearest[o] = m;
        } else if (d < second_d[o]) {
          second_d[o] = d;
        }
      }
    }
  }

  double swap_cost(const DistanceMatrix& dist, std::size_t out, std::size_t in) const {
    double total = 0.0;
    const auto in_row = dist.row(in);
    for (std::size_t o = 0; o < nearest.size(); ++o) {
      const double keep = nearest[o] == out ? second_d[o] : nearest_d[o];
      total += std::min(keep, in_row[o]);
    }
    return total;
  }
};

struct Swap {
  std::size_t out;
  std::size_t in;
  double cost;
};

// First strictly improving swap in scan order, if any.
std::optional<Swap> find_improving_swap(const DistanceMatrix& dist,
                                        std::span<const std::size_t> medoids, double current_cost,
                                        unsigned threads) {
  const std::size_t n = dist.size();
  const NearestCache cache(dist, medoids);

  std::vector<bool> is_medoid(n, false);
  for (std::size_t m : medoids) is_medoid[m] = true;
  std::vector<std::size_t> candidates;
  candidates.reserve(n - medoids.size());
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_medoid[c]) candidates.push_back(c);
  }

  std::vector<double> costs(candidates.size());
  for (std::size_t out : medoids) {
    if (threads <= 1) {
      for (std::size_t c : candidates) {
        const double cost = cache.swap_cost(dist, out, c);
        if (clearly_less(cost, current_cost)) return Swap{out, c, cost};
      }
      continue;
    }
    detail::parallel_for(candidates.size(), threads, [&](std::size_t i) {
      costs[i] = cache.swap_cost(dist, out, candidates[i]);
    });
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (clearly_less(costs[i], current_cost)) return Swap{out, candidates[i], costs[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

double manhattan_distance(std::span<const double> x, std::span<const double> y) {
  check_dimensions(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
  return sum;
}

double euclidean_distance(std::span<const double> x, std::span<const double> y) {
  check_dimensions(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

// ---------------------------------------------------------------------------

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw Error(ErrorCode::DimensionMismatch, "distance table must be n x n");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (values_[i * n_ + i] != 0.0) {
      throw Error(ErrorCode::InvariantViolation, "distance table diagonal must be zero");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = values_[i * n_ + j];
      if (d != values_[j * n_ + i] || !(d >= 0.0)) {
        throw Error(ErrorCode::InvariantViolation,
                    "distance table must be symmetric and non-negative");
      }
    }
  }
}

DistanceMatrix DistanceMatrix::build(const TermDocumentMatrix& matrix, DistanceMetric metric,
                                     unsigned threads) {
  const std::size_t n = matrix.rows();
  std::vector<double> values(n * n, 0.0);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values[i * n + j] = metric == DistanceMetric::Manhattan
                              ? manhattan_distance(matrix.row(i), matrix.row(j))
                              : euclidean_distance(matrix.row(i), matrix.row(j));
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) values[j * n + i] = values[i * n + j];
  }
  DistanceMatrix out;
  out.n_ = n;
  out.values_ = std::move(values);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> initialize_medoids(std::size_t document_count, std::size_t k,
                                            const InitStrategy& strategy,
                                            std::optional<LabelView> labels) {
  if (k < 1 || k > document_count) {
    throw Error(ErrorCode::BadK, "k=" + std::to_string(k) + " outside [1, " +
                                     std::to_string(document_count) + "]");
  }

  std::vector<std::size_t> medoids;
  if (strategy.kind == InitKind::RandomSeeded) {
    std::vector<std::size_t> pool(document_count);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    std::mt19937_64 rng(strategy.seed);
    // Plain modulo keeps the draw reproducible across standard libraries,
    // unlike std::uniform_int_distribution.
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (document_count - i));
      std::swap(pool[i], pool[j]);
    }
    medoids.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    if (!labels || labels->size() != document_count) {
      throw Error(ErrorCode::MissingLabels, "stratified initialization needs a label per document");
    }
    std::map<std::string_view, std::size_t> first_row;
    for (std::size_t r = 0; r < document_count; ++r) {
      const auto& label = (*labels)[r];
      if (!label) {
        throw Error(ErrorCode::MissingLabels,
                    "document row " + std::to_string(r) + " has no label");
      }
      first_row.try_emplace(*label, r);
    }
    if (first_row.size() != k) {
      throw Error(ErrorCode::BadK, "stratified initialization needs k equal to the " +
                                       std::to_string(first_row.size()) +
                                       " distinct labels, got k=" + std::to_string(k));
    }
    for (const auto& [label, row] : first_row) medoids.push_back(row);
  }
  std::sort(medoids.begin(), medoids.end());
  return medoids;
}

Assignment assign(const DistanceMatrix& distances, std::span<const std::size_t> medoids) {
  const std::size_t n = distances.size();
  check_medoid_set(n, medoids);
  std::vector<std::size_t> sorted(medoids.begin(), medoids.end());
  std::sort(sorted.begin(), sorted.end());

  Assignment result;
  result.medoid_of.resize(n);
  for (std::size_t o = 0; o < n; ++o) {
    // A medoid owns itself even when a lower medoid row is an exact duplicate.
    if (std::binary_search(sorted.begin(), sorted.end(), o)) {
      result.medoid_of[o] = o;
      continue;
    }
    double min_d = distances(o, sorted.front());
    for (std::size_t i = 1; i < sorted.size(); ++i) min_d = std::min(min_d, distances(o, sorted[i]));
    // Lowest medoid whose distance is not clearly above the minimum.
    std::size_t best = sorted.front();
    for (std::size_t m : sorted) {
      if (!clearly_less(min_d, distances(o, m))) {
        best = m;
        break;
      }
    }
    result.medoid_of[o] = best;
    result.total_cost += min_d;
  }
  return result;
}

std::vector<std::size_t> Clustering::members(std::size_t cluster) const {
  std::vector<std::size_t> rows;
  const std::size_t medoid = medoids.at(cluster);
  for (std::size_t r = 0; r < assignment.size(); ++r) {
    if (assignment[r] == medoid) rows.push_back(r);
  }
  return rows;
}

SwapEvaluation try_swap(const DistanceMatrix& distances, const Clustering& current,
                        std::size_t medoid_out, std::size_t candidate_in) {
  const auto& medoids = current.medoids;
  if (std::find(medoids.begin(), medoids.end(), medoid_out) == medoids.end()) {
    throw Error(ErrorCode::NotAMedoid, "row " + std::to_string(medoid_out) + " is not a medoid");
  }
  if (candidate_in >= distances.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "candidate row " + std::to_string(candidate_in) + " out of range");
  }
  if (std::find(medoids.begin(), medoids.end(), candidate_in) != medoids.end()) {
    throw Error(ErrorCode::AlreadyMedoid,
                "row " + std::to_string(candidate_in) + " is already a medoid");
  }
  std::vector<std::size_t> swapped(medoids);
  std::replace(swapped.begin(), swapped.end(), medoid_out, candidate_in);
  const double cost = assign(distances, swapped).total_cost;
  return {cost, clearly_less(cost, current.total_cost)};
}

Clustering cluster_from(const DistanceMatrix& distances, std::vector<std::size_t> initial_medoids,
                        std::size_t max_iterations, unsigned threads) {
  const std::size_t n = distances.size();
  check_medoid_set(n, initial_medoids);
  if (max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  }

  Clustering result;
  result.medoids = std::move(initial_medoids);
  std::sort(result.medoids.begin(), result.medoids.end());
  Assignment current = assign(distances, result.medoids);
  result.initial_cost = current.total_cost;
  result.cost_trace.push_back(current.total_cost);

  while (true) {
    const auto swap = find_improving_swap(distances, result.medoids, current.total_cost, threads);
    if (!swap) {
      result.converged = true;
      break;
    }
    if (result.iterations == max_iterations) {
      result.converged = false;
      break;
    }
    std::replace(result.medoids.begin(), result.medoids.end(), swap->out, swap->in);
    std::sort(result.medoids.begin(), result.medoids.end());
    current = assign(distances, result.medoids);
    ++result.iterations;
    result.cost_trace.push_back(current.total_cost);
  }

  result.assignment = std::move(current.medoid_of);
  result.total_cost = current.total_cost;
  return result;
}

Clustering cluster(const DistanceMatrix& distances, const ClusterOptions& options,
                   std::optional<LabelView> labels) {
  auto medoids = initialize_medoids(distances.size(), options.k, options.init, labels);
  const std::size_t max_iterations = options.max_iterations.value_or(10 * distances.size());
  return cluster_from(distances, std::move(medoids), max_iterations, options.threads);
}

Clustering cluster(const TermDocumentMatrix& matrix, const ClusterOptions& options,
                   std::optional<LabelView> labels) {
  return cluster(DistanceMatrix::build(matrix, DistanceMetric::Manhattan, options.threads),
                 options, labels);
}

void verify_clustering(const DistanceMatrix& distances, const Clustering& clustering) {
  const std::size_t n = distances.size();
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvariantViolation, "clustering invariant violated: " + what);
  };
  if (clustering.assignment.size() != n) fail("assignment length differs from document count");
  if (!std::is_sorted(clustering.medoids.begin(), clustering.medoids.end())) {
    fail("medoids not in ascending order");
  }
  try {
    check_medoid_set(n, clustering.medoids);
  } catch (const Error& e) {
    fail(e.what());
  }
  for (std::size_t m : clustering.medoids) {
    if (clustering.assignment[m] != m) fail("medoid " + std::to_string(m) + " not self-assigned");
  }
  const Assignment expected = assign(distances, clustering.medoids);
  if (expected.medoid_of != clustering.assignment) fail("assignment is not nearest-medoid");
  const double tol = 1e-12 * std::max(1.0, std::abs(expected.total_cost));
  if (std::abs(expected.total_cost - clustering.total_cost) > tol) {
    fail("total_cost does not match recomputed assignment cost");
  }
  std::size_t sized = 0;
  for (std::size_t c = 0; c < clustering.k(); ++c) sized += clustering.members(c).size();
  if (sized != n) fail("cluster sizes do not sum to document count");
}

}  // namespace docclust
