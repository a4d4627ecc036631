#include "aimkm/eval.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "aimkm/errors.hpp"
#include "aimkm/random.hpp"

namespace aimkm {

double sse(const Dataset& dataset, std::span<const Point> centroids) {
    if (centroids.empty()) {
        throw std::invalid_argument("sse with no centroids");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto x = dataset.point(i);
        double best = squared_euclidean(x, centroids[0]);
        for (std::size_t j = 1; j < centroids.size(); ++j) {
            best = std::min(best, squared_euclidean(x, centroids[j]));
        }
        total += best;
    }
    return total;
}

double average_sse(const Dataset& dataset, std::span<const Point> centroids) {
    const double total = sse(dataset, centroids);
    if (dataset.empty()) {
        throw std::invalid_argument("average sse of an empty dataset");
    }
    return total / static_cast<double>(dataset.size());
}

namespace {

double partition_cost(const Dataset& dataset, const std::vector<std::size_t>& labels,
                      std::size_t k) {
    std::vector<CentroidAccumulator> acc(k, CentroidAccumulator(dataset.dim()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        acc[labels[i]].add(dataset.point(i));
    }
    std::vector<Point> means(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (acc[j].count() > 0) {
            means[j] = acc[j].mean();
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        total += squared_euclidean(dataset.point(i), means[labels[i]]);
    }
    return total;
}

// Advances `labels` to the next restricted growth string with at most k
// blocks: labels[0] == 0 and labels[i] <= 1 + max(labels[0..i)).
bool next_rgs(std::vector<std::size_t>& labels, std::vector<std::size_t>& prefix_max,
              std::size_t k) {
    const std::size_t n = labels.size();
    for (std::size_t i = n; i-- > 1;) {
        const std::size_t cap = std::min(k - 1, prefix_max[i - 1] + 1);
        if (labels[i] < cap) {
            ++labels[i];
            prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                labels[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
            return true;
        }
    }
    return false;
}

// Odometer over all k^n labellings.
bool next_labelling(std::vector<std::size_t>& labels, std::size_t k) {
    for (std::size_t i = labels.size(); i-- > 0;) {
        if (++labels[i] < k) {
            return true;
        }
        labels[i] = 0;
    }
    return false;
}

}  // namespace

BruteForceResult brute_force_optimal(const Dataset& dataset, std::size_t k,
                                     const BruteForceOptions& options) {
    const std::size_t n = dataset.size();
    if (n > options.max_n) {
        throw InfeasibleSizeError("brute force limited to n <= " + std::to_string(options.max_n) +
                                  " (n = " + std::to_string(n) + ")");
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument("k must satisfy 1 <= k <= n");
    }

    BruteForceResult best;
    best.sse = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> labels(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    do {
        const double cost = partition_cost(dataset, labels, k);
        if (cost < best.sse) {
            best.sse = cost;
            best.assignment.labels = labels;
        }
    } while (options.canonical ? next_rgs(labels, prefix_max, k) : next_labelling(labels, k));
    return best;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
    return derive_seed(master_seed, trial);
}

namespace {

TrialRecord run_trial(const Dataset& dataset, std::size_t user_k, std::size_t t,
                      std::uint64_t master_seed, const AimConfig& aim_config,
                      const KmeansConfig& km_config) {
    TrialRecord rec;
    rec.trial = t;
    rec.seed = trial_seed(master_seed, t);

    KmeansConfig km = km_config;
    km.seed = derive_seed(rec.seed, 0);
    const auto user_init = random_init(dataset, user_k, km.seed);
    rec.avg_sse_kmeans_user_k = kmeans_run(dataset, user_init, km).average_sse;

    AimConfig aim = aim_config;
    aim.seed = derive_seed(rec.seed, 1);
    const auto aim_result = aim_initialize(dataset, aim);
    rec.aim_k = aim_result.k;
    rec.avg_sse_aim_kmeans = kmeans_run(dataset, aim_result.means, km_config).average_sse;

    km.seed = derive_seed(rec.seed, 2);
    const auto aim_k_init = random_init(dataset, rec.aim_k, km.seed);
    rec.avg_sse_kmeans_aim_k = kmeans_run(dataset, aim_k_init, km).average_sse;
    return rec;
}

}  // namespace

ComparisonReport run_comparison(const Dataset& dataset, std::size_t user_k, std::size_t trials,
                                std::uint64_t master_seed, const AimConfig& aim_config,
                                const KmeansConfig& km_config, std::size_t threads) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    if (user_k < 1 || user_k > dataset.size()) {
        throw std::invalid_argument("user k must satisfy 1 <= k <= n (k = " +
                                    std::to_string(user_k) +
                                    ", n = " + std::to_string(dataset.size()) + ")");
    }

    std::vector<TrialRecord> records(trials);
    threads = std::clamp<std::size_t>(threads, 1, trials);
    if (threads == 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            records[t] = run_trial(dataset, user_k, t, master_seed, aim_config, km_config);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t = next++; t < trials; t = next++) {
                    try {
                        records[t] = run_trial(dataset, user_k, t, master_seed, aim_config,
                                               km_config);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        for (auto& w : workers) {
            w.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    ComparisonReport report;
    report.user_k = user_k;
    report.trials = trials;
    report.master_seed = master_seed;
    report.aim_config = aim_config;
    report.kmeans_config = km_config;

    // Reduction in trial order.
    std::map<std::size_t, std::size_t> k_counts;
    for (const auto& r : records) {
        report.avg_sse_kmeans_user_k += r.avg_sse_kmeans_user_k;
        report.avg_sse_aim_kmeans += r.avg_sse_aim_kmeans;
        report.avg_sse_kmeans_aim_k += r.avg_sse_kmeans_aim_k;
        ++k_counts[r.aim_k];
    }
    const double count = static_cast<double>(trials);
    report.avg_sse_kmeans_user_k /= count;
    report.avg_sse_aim_kmeans /= count;
    report.avg_sse_kmeans_aim_k /= count;

    std::size_t best_count = 0;
    for (const auto& [k, c] : k_counts) {
        if (c > best_count) {
            best_count = c;
            report.aim_k = k;
        }
    }
    report.per_trial = std::move(records);
    return report;
}

}  // namespace aimkm
