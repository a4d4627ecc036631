#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aimkm/aim.hpp"
#include "aimkm/data.hpp"
#include "aimkm/kmeans.hpp"

namespace aimkm {

/// Sum over rows of the squared distance to the nearest centroid.
double sse(const Dataset& dataset, std::span<const Point> centroids);

/// sse / n.
double average_sse(const Dataset& dataset, std::span<const Point> centroids);

struct BruteForceOptions {
    std::size_t max_n = 10;
    /// Enumerate restricted growth strings (one labelling per partition)
    /// instead of all k^n labellings. Both give the same minimum.
    bool canonical = true;
};

struct BruteForceResult {
    double sse = 0.0;
    Assignment assignment;
};

/// Exact minimum of the K-means objective over every partition of the rows
/// into at most k clusters, each scored against its own mean. Throws
/// InfeasibleSizeError when n > max_n and std::invalid_argument unless
/// 1 <= k <= n.
BruteForceResult brute_force_optimal(const Dataset& dataset, std::size_t k,
                                     const BruteForceOptions& options = {});

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t aim_k = 0;
    double avg_sse_kmeans_user_k = 0.0;
    double avg_sse_aim_kmeans = 0.0;
    double avg_sse_kmeans_aim_k = 0.0;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Three-phase comparison averaged over trials: K-means from random means
/// with the user's k, K-means from AIM's means (AIM-K-means), and K-means
/// from random means with AIM's k.
struct ComparisonReport {
    std::size_t user_k = 0;
    /// Most frequent per-trial AIM k; ties go to the smaller k.
    std::size_t aim_k = 0;
    double avg_sse_kmeans_user_k = 0.0;
    double avg_sse_aim_kmeans = 0.0;
    double avg_sse_kmeans_aim_k = 0.0;
    std::size_t trials = 0;
    std::uint64_t master_seed = 0;
    AimConfig aim_config;
    KmeansConfig kmeans_config;
    std::vector<TrialRecord> per_trial;
};

/// Seed of trial `t`: derive_seed(master_seed, t). Within a trial, phase p
/// (0 = random init at user k, 1 = AIM, 2 = random init at AIM's k) uses
/// derive_seed(trial seed, p).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

/// Runs the comparison. `threads` > 1 spreads trials over worker threads;
/// the report does not depend on it. The seed fields of `aim_config` and
/// `km_config` are ignored in favour of per-trial seeds. Throws
/// std::invalid_argument if trials < 1 or user_k is not in [1, n].
ComparisonReport run_comparison(const Dataset& dataset, std::size_t user_k, std::size_t trials,
                                std::uint64_t master_seed, const AimConfig& aim_config,
                                const KmeansConfig& km_config, std::size_t threads = 1);

}  // namespace aimkm
