#pragma once

// Automatic Initialization of Means (AIM).
//
// AIM picks both the cluster count and the initial means for K-means in a
// single pass over the data. A scalar distance threshold is computed once on
// the full dataset. The first mean is a random row; every other row is then
// visited once in a random order and promoted to a mean when its average
// Euclidean distance to the means selected so far passes the threshold.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aimkm/data.hpp"
#include "aimkm/geometry.hpp"

namespace aimkm {

/// How the scalar threshold is derived from the data. With c the global
/// centroid and d_i = |x_i - c|:
enum class ThresholdStrategy {
    CentroidMeanPlusStd,   ///< mean(d) + population std(d). Default.
    CentroidMean,          ///< mean(d)
    CentroidRms,           ///< sqrt(mean(d^2))
    PairwiseMeanPlusStd,   ///< mean + population std over all pairwise distances
};

/// Stable names used on the command line and in reports, e.g.
/// "centroid-mean-plus-std".
std::string_view to_string(ThresholdStrategy strategy);
std::optional<ThresholdStrategy> parse_threshold_strategy(std::string_view name);

struct AimConfig {
    std::uint64_t seed = 0;
    ThresholdStrategy strategy = ThresholdStrategy::CentroidMeanPlusStd;
    /// Accept a candidate only when its average distance is strictly greater
    /// than the threshold. When false the test is >=, which on constant data
    /// promotes every row.
    bool strict_inequality = true;
};

struct AimResult {
    std::size_t k = 0;
    std::vector<Point> means;
    /// Row index of each mean, in selection order. means[j] == row mean_indices[j].
    std::vector<std::size_t> mean_indices;
    double threshold = 0.0;
    /// The first mean's row.
    std::size_t first_index = 0;
    /// Candidate rows in the order they were visited (every row but the first).
    std::vector<std::size_t> visited_order;

    friend bool operator==(const AimResult&, const AimResult&) = default;
};

/// Throws std::invalid_argument on an empty dataset.
double distance_threshold(const Dataset& dataset, ThresholdStrategy strategy);

/// Mean Euclidean distance from `candidate` to each of `means`. Throws
/// std::invalid_argument when `means` is empty.
double average_distance(std::span<const Point> means, PointView candidate);

/// The selection scan with all randomness fixed: starts from `first_index`
/// and visits `visit_order` once. Returns the accepted row indices, first
/// mean included.
std::vector<std::size_t> select_means(const Dataset& dataset, double threshold,
                                      std::size_t first_index,
                                      std::span<const std::size_t> visit_order,
                                      bool strict_inequality);

/// Full AIM run. The first mean and the visiting order are drawn from
/// config.seed and recorded in the result so the scan can be replayed.
AimResult aim_initialize(const Dataset& dataset, const AimConfig& config);

}  // namespace aimkm
