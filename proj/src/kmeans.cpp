#include "aimkm/kmeans.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "aimkm/random.hpp"

namespace aimkm {

namespace {

void check_centroids(const Dataset& dataset, std::span<const Point> centroids) {
    if (centroids.empty()) {
        throw std::invalid_argument("no centroids");
    }
    for (const auto& c : centroids) {
        if (c.size() != dataset.dim()) {
            throw std::invalid_argument("centroid dimension " + std::to_string(c.size()) +
                                        " does not match dataset dimension " +
                                        std::to_string(dataset.dim()));
        }
    }
}

// Nearest-centroid pass that also returns the summed squared distance.
double assign_into(const Dataset& dataset, std::span<const Point> centroids,
                   std::vector<std::size_t>& labels) {
    labels.resize(dataset.size());
    double total = 0.0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto x = dataset.point(i);
        std::size_t best = 0;
        double best_d = squared_euclidean(x, centroids[0]);
        for (std::size_t j = 1; j < centroids.size(); ++j) {
            const double d = squared_euclidean(x, centroids[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        labels[i] = best;
        total += best_d;
    }
    return total;
}

}  // namespace

Assignment assign(const Dataset& dataset, std::span<const Point> centroids) {
    check_centroids(dataset, centroids);
    Assignment out;
    assign_into(dataset, centroids, out.labels);
    return out;
}

std::vector<Point> update_centroids(const Dataset& dataset, const Assignment& assignment,
                                    std::size_t k, std::span<const Point> previous,
                                    std::size_t* empty_clusters) {
    if (assignment.labels.size() != dataset.size()) {
        throw std::invalid_argument("assignment length does not match dataset size");
    }
    if (previous.size() != k) {
        throw std::invalid_argument("previous centroid count does not match k");
    }
    std::vector<CentroidAccumulator> acc(k, CentroidAccumulator(dataset.dim()));
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto label = assignment.labels[i];
        if (label >= k) {
            throw std::invalid_argument("label out of range");
        }
        acc[label].add(dataset.point(i));
    }
    std::vector<Point> out;
    out.reserve(k);
    std::size_t empties = 0;
    for (std::size_t j = 0; j < k; ++j) {
        if (acc[j].count() == 0) {
            out.push_back(previous[j]);
            ++empties;
        } else {
            out.push_back(acc[j].mean());
        }
    }
    if (empty_clusters != nullptr) {
        *empty_clusters = empties;
    }
    return out;
}

ClusteringResult kmeans_run(const Dataset& dataset, std::span<const Point> initial_centroids,
                            const KmeansConfig& config) {
    const std::size_t k = initial_centroids.size();
    if (k < 1 || k > dataset.size()) {
        throw std::invalid_argument("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                                    ", n = " + std::to_string(dataset.size()) + ")");
    }
    check_centroids(dataset, initial_centroids);
    if (config.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (!(config.tolerance >= 0.0)) {
        throw std::invalid_argument("tolerance must be >= 0");
    }

    ClusteringResult result;
    result.centroids.assign(initial_centroids.begin(), initial_centroids.end());
    double current_sse = assign_into(dataset, result.centroids, result.assignment.labels);
    result.sse_trace.push_back(current_sse);

    std::vector<std::size_t> next_labels;
    while (result.iterations < config.max_iterations) {
        std::size_t empties = 0;
        auto next = update_centroids(dataset, result.assignment, k, result.centroids, &empties);
        result.empty_cluster_events += empties;

        double displacement = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            displacement = std::max(displacement, euclidean(next[j], result.centroids[j]));
        }

        current_sse = assign_into(dataset, next, next_labels);
        ++result.iterations;
        result.sse_trace.push_back(current_sse);

        const bool labels_stable = next_labels == result.assignment.labels;
        result.centroids = std::move(next);
        std::swap(result.assignment.labels, next_labels);

        if (labels_stable) {
            result.converged = true;
            result.stop_reason = StopReason::LabelsStable;
            break;
        }
        if (displacement <= config.tolerance) {
            result.stop_reason = StopReason::CentroidsStable;
            break;
        }
    }

    result.sse = current_sse;
    result.average_sse = current_sse / static_cast<double>(dataset.size());
    return result;
}

std::vector<Point> random_init(const Dataset& dataset, std::size_t k, std::uint64_t seed) {
    const std::size_t n = dataset.size();
    if (k < 1 || k > n) {
        throw std::invalid_argument("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                                    ", n = " + std::to_string(n) + ")");
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng(seed);
    // Partial Fisher-Yates: the first k slots end up a uniform k-sample.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_index(n - i);
        std::swap(idx[i], idx[j]);
    }
    std::vector<Point> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(dataset.copy_point(idx[i]));
    }
    return out;
}

}  // namespace aimkm
