#include "aimkm/aim.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "aimkm/random.hpp"

namespace aimkm {

namespace {

constexpr std::array<std::pair<ThresholdStrategy, std::string_view>, 4> kStrategyNames{{
    {ThresholdStrategy::CentroidMeanPlusStd, "centroid-mean-plus-std"},
    {ThresholdStrategy::CentroidMean, "centroid-mean"},
    {ThresholdStrategy::CentroidRms, "centroid-rms"},
    {ThresholdStrategy::PairwiseMeanPlusStd, "pairwise-mean-plus-std"},
}};

// Two-pass population statistics, summed in index order.
struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

Moments moments(std::span<const double> xs) {
    Moments m;
    if (xs.empty()) {
        return m;
    }
    const double n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    m.mean = sum / n;
    double sq = 0.0;
    for (double x : xs) {
        const double dev = x - m.mean;
        sq += dev * dev;
    }
    m.stddev = std::sqrt(sq / n);
    return m;
}

bool passes(double avg, double threshold, bool strict) {
    return strict ? avg > threshold : avg >= threshold;
}

}  // namespace

std::string_view to_string(ThresholdStrategy strategy) {
    for (const auto& [s, name] : kStrategyNames) {
        if (s == strategy) {
            return name;
        }
    }
    return "unknown";
}

std::optional<ThresholdStrategy> parse_threshold_strategy(std::string_view name) {
    for (const auto& [s, n] : kStrategyNames) {
        if (n == name) {
            return s;
        }
    }
    return std::nullopt;
}

double distance_threshold(const Dataset& dataset, ThresholdStrategy strategy) {
    if (dataset.empty()) {
        throw std::invalid_argument("distance threshold of an empty dataset");
    }
    const std::size_t n = dataset.size();

    if (strategy == ThresholdStrategy::PairwiseMeanPlusStd) {
        if (n < 2) {
            return 0.0;
        }
        std::vector<double> pairwise;
        pairwise.reserve(n * (n - 1) / 2);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                pairwise.push_back(euclidean(dataset.point(i), dataset.point(j)));
            }
        }
        const auto m = moments(pairwise);
        return m.mean + m.stddev;
    }

    const Point center = centroid_of(dataset);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = euclidean(dataset.point(i), center);
    }

    switch (strategy) {
        case ThresholdStrategy::CentroidMeanPlusStd: {
            const auto m = moments(dist);
            return m.mean + m.stddev;
        }
        case ThresholdStrategy::CentroidMean:
            return moments(dist).mean;
        case ThresholdStrategy::CentroidRms: {
            double sq = 0.0;
            for (double d : dist) {
                sq += d * d;
            }
            return std::sqrt(sq / static_cast<double>(n));
        }
        case ThresholdStrategy::PairwiseMeanPlusStd:
            break;
    }
    throw std::invalid_argument("unknown threshold strategy");
}

double average_distance(std::span<const Point> means, PointView candidate) {
    if (means.empty()) {
        throw std::invalid_argument("average distance to an empty mean set");
    }
    double total = 0.0;
    for (const auto& m : means) {
        total += euclidean(m, candidate);
    }
    return total / static_cast<double>(means.size());
}

std::vector<std::size_t> select_means(const Dataset& dataset, double threshold,
                                      std::size_t first_index,
                                      std::span<const std::size_t> visit_order,
                                      bool strict_inequality) {
    if (first_index >= dataset.size()) {
        throw std::invalid_argument("first mean index out of range");
    }
    std::vector<std::size_t> selected{first_index};
    std::vector<Point> means{dataset.copy_point(first_index)};
    for (std::size_t candidate : visit_order) {
        if (candidate >= dataset.size()) {
            throw std::invalid_argument("candidate index out of range");
        }
        const auto point = dataset.point(candidate);
        if (passes(average_distance(means, point), threshold, strict_inequality)) {
            selected.push_back(candidate);
            means.emplace_back(point.begin(), point.end());
        }
    }
    return selected;
}

AimResult aim_initialize(const Dataset& dataset, const AimConfig& config) {
    if (dataset.empty()) {
        throw std::invalid_argument("AIM on an empty dataset");
    }
    const std::size_t n = dataset.size();

    AimResult result;
    result.threshold = distance_threshold(dataset, config.strategy);

    Rng rng(config.seed);
    result.first_index = rng.uniform_index(n);

    // The temporary pool: every row except the first mean, visited once.
    result.visited_order.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i != result.first_index) {
            result.visited_order.push_back(i);
        }
    }
    rng.shuffle(std::span<std::size_t>(result.visited_order));

    result.mean_indices = select_means(dataset, result.threshold, result.first_index,
                                       result.visited_order, config.strict_inequality);
    result.k = result.mean_indices.size();
    result.means.reserve(result.k);
    for (auto i : result.mean_indices) {
        result.means.push_back(dataset.copy_point(i));
    }
    return result;
}

}  // namespace aimkm
