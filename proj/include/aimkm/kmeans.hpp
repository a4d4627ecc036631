#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aimkm/data.hpp"
#include "aimkm/geometry.hpp"

namespace aimkm {

struct Assignment {
    /// Cluster index of each dataset row.
    std::vector<std::size_t> labels;

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct KmeansConfig {
    std::size_t max_iterations = 100;
    /// Stop once no centroid moves farther than this.
    double tolerance = 1e-9;
    /// Only used by random initialization.
    std::uint64_t seed = 0;
};

enum class StopReason {
    LabelsStable,
    CentroidsStable,
    IterationCap,
};

struct ClusteringResult {
    std::vector<Point> centroids;
    Assignment assignment;
    double sse = 0.0;
    double average_sse = 0.0;
    /// Assign+update passes performed.
    std::size_t iterations = 0;
    /// True only when labels stopped changing, so the final state is a fixed
    /// point of one more assign+update pass.
    bool converged = false;
    StopReason stop_reason = StopReason::IterationCap;
    /// Total number of (iteration, cluster) pairs where a cluster was empty.
    std::size_t empty_cluster_events = 0;
    /// SSE of the initial centroids followed by the SSE after each pass.
    std::vector<double> sse_trace;
};

/// Nearest centroid for every row (squared Euclidean, ties to the lowest
/// index). Throws std::invalid_argument on empty centroids or dimension
/// mismatch.
Assignment assign(const Dataset& dataset, std::span<const Point> centroids);

/// Per-cluster means. An empty cluster keeps its previous centroid; the
/// number of such clusters is stored in `empty_clusters` when given.
std::vector<Point> update_centroids(const Dataset& dataset, const Assignment& assignment,
                                    std::size_t k, std::span<const Point> previous,
                                    std::size_t* empty_clusters = nullptr);

/// Lloyd iterations from the given centroids until labels stabilize, the
/// largest centroid move is within tolerance, or max_iterations is reached.
/// Throws std::invalid_argument unless 1 <= k <= n and dimensions agree.
ClusteringResult kmeans_run(const Dataset& dataset, std::span<const Point> initial_centroids,
                            const KmeansConfig& config = {});

/// k distinct rows sampled uniformly without replacement, in sampled order.
/// Throws std::invalid_argument unless 1 <= k <= n.
std::vector<Point> random_init(const Dataset& dataset, std::size_t k, std::uint64_t seed);

}  // namespace aimkm
