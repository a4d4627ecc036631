#include "aimkm/aim.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace aimkm {
namespace {

// 1-D rows {0, 0.1, 10, 10.1}.
Dataset four_points() { return Dataset(1, {0.0, 0.1, 10.0, 10.1}); }

Dataset random_dataset(std::mt19937_64& gen, std::size_t n, std::size_t dim) {
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    std::vector<double> v(n * dim);
    for (auto& x : v) {
        x = coord(gen);
    }
    return Dataset(dim, std::move(v));
}

// Replays the scan directly from its definition, independent of select_means.
std::vector<std::size_t> replay(const Dataset& d, const AimResult& r, bool strict) {
    std::vector<std::size_t> chosen{r.first_index};
    for (auto c : r.visited_order) {
        double total = 0.0;
        for (auto m : chosen) {
            total += euclidean(d.point(m), d.point(c));
        }
        const double avg = total / static_cast<double>(chosen.size());
        if (strict ? avg > r.threshold : avg >= r.threshold) {
            chosen.push_back(c);
        }
    }
    return chosen;
}

TEST(DistanceThreshold, IdenticalPointsGiveZero) {
    const Dataset same(2, {1.5, -3, 1.5, -3, 1.5, -3, 1.5, -3});
    for (auto s : {ThresholdStrategy::CentroidMeanPlusStd, ThresholdStrategy::CentroidMean,
                   ThresholdStrategy::CentroidRms, ThresholdStrategy::PairwiseMeanPlusStd}) {
        EXPECT_EQ(distance_threshold(same, s), 0.0) << to_string(s);
    }
}

TEST(DistanceThreshold, TwoPointExample) {
    EXPECT_DOUBLE_EQ(distance_threshold(Dataset(1, {0.0, 2.0}),
                                        ThresholdStrategy::CentroidMeanPlusStd),
                     1.0);
}

TEST(DistanceThreshold, FourPointExamplePerStrategy) {
    const auto d = four_points();
    EXPECT_NEAR(distance_threshold(d, ThresholdStrategy::CentroidMeanPlusStd), 5.05, 1e-12);
    EXPECT_NEAR(distance_threshold(d, ThresholdStrategy::CentroidMean), 5.0, 1e-12);
    EXPECT_NEAR(distance_threshold(d, ThresholdStrategy::CentroidRms), 5.000249993750312, 1e-12);
    EXPECT_NEAR(distance_threshold(d, ThresholdStrategy::PairwiseMeanPlusStd),
                11.367261866805134, 1e-12);
}

TEST(DistanceThreshold, SinglePointAndEmpty) {
    const Dataset one(2, {3, 4});
    EXPECT_EQ(distance_threshold(one, ThresholdStrategy::PairwiseMeanPlusStd), 0.0);
    EXPECT_EQ(distance_threshold(one, ThresholdStrategy::CentroidMeanPlusStd), 0.0);
    EXPECT_THROW(distance_threshold(Dataset(), ThresholdStrategy::CentroidMean),
                 std::invalid_argument);
}

TEST(StrategyNames, RoundTrip) {
    for (auto s : {ThresholdStrategy::CentroidMeanPlusStd, ThresholdStrategy::CentroidMean,
                   ThresholdStrategy::CentroidRms, ThresholdStrategy::PairwiseMeanPlusStd}) {
        EXPECT_EQ(parse_threshold_strategy(to_string(s)), s);
    }
    EXPECT_FALSE(parse_threshold_strategy("mean-minus-std").has_value());
}

TEST(AverageDistance, Examples) {
    const std::vector<Point> one{{1, 1}};
    EXPECT_DOUBLE_EQ(average_distance(one, Point{4, 5}), 5.0);
    EXPECT_EQ(average_distance(one, Point{1, 1}), 0.0);
    const std::vector<Point> two{{0}, {10}};
    EXPECT_EQ(average_distance(two, Point{4}), 5.0);
    EXPECT_THROW(average_distance(std::vector<Point>{}, Point{1}), std::invalid_argument);
}

TEST(SelectMeans, HandTraceWithFixedOrder) {
    const auto d = four_points();
    const double threshold = distance_threshold(d, ThresholdStrategy::CentroidMeanPlusStd);
    const std::vector<std::size_t> order{2, 3, 0};
    // First mean 0.1; 10 accepted (9.9); 10.1 and 0 both average exactly 5.05.
    EXPECT_EQ(select_means(d, threshold, 1, order, true), (std::vector<std::size_t>{1, 2}));
    // The >= test accepts the ties.
    EXPECT_EQ(select_means(d, threshold, 1, order, false),
              (std::vector<std::size_t>{1, 2, 3, 0}));
}

TEST(AimInitialize, SinglePoint) {
    const Dataset one(3, {1, 2, 3});
    const auto r = aim_initialize(one, {});
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.means, (std::vector<Point>{{1, 2, 3}}));
    EXPECT_TRUE(r.visited_order.empty());
}

TEST(AimInitialize, IdenticalPointsStrictGivesOneMean) {
    const Dataset same(2, std::vector<double>(40, 0.7));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        EXPECT_EQ(aim_initialize(same, {.seed = seed}).k, 1u);
    }
    // The literal >= test promotes every row.
    EXPECT_EQ(aim_initialize(same, {.seed = 0, .strict_inequality = false}).k, 20u);
}

TEST(AimInitialize, EmptyThrows) {
    EXPECT_THROW(aim_initialize(Dataset(), {}), std::invalid_argument);
}

TEST(AimInitialize, SeedDrivesFirstMeanAndOrder) {
    const auto d = four_points();
    std::set<std::size_t> firsts;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        const auto r = aim_initialize(d, {.seed = seed});
        firsts.insert(r.first_index);
    }
    EXPECT_EQ(firsts.size(), 4u);
}

TEST(AimProperty, ResultInvariantsAndReplay) {
    std::mt19937_64 gen(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 60;
        const std::size_t dim = 1 + trial % 4;
        const auto d = random_dataset(gen, n, dim);
        const AimConfig config{.seed = static_cast<std::uint64_t>(trial),
                               .strategy = static_cast<ThresholdStrategy>(trial % 4),
                               .strict_inequality = trial % 3 != 0};
        const auto r = aim_initialize(d, config);

        ASSERT_GE(r.k, 1u);
        ASSERT_LE(r.k, n);
        ASSERT_EQ(r.means.size(), r.k);
        ASSERT_EQ(r.mean_indices.size(), r.k);
        EXPECT_EQ(r.mean_indices.front(), r.first_index);
        EXPECT_EQ(std::set<std::size_t>(r.mean_indices.begin(), r.mean_indices.end()).size(), r.k);
        for (std::size_t j = 0; j < r.k; ++j) {
            EXPECT_EQ(r.means[j], d.copy_point(r.mean_indices[j]));
        }

        // Visiting order covers every other row exactly once.
        auto visited = r.visited_order;
        visited.push_back(r.first_index);
        std::sort(visited.begin(), visited.end());
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_EQ(visited[i], i);
        }

        // Monotone scan: the means appear in visiting order.
        std::size_t pos = 0;
        for (std::size_t j = 1; j < r.k; ++j) {
            while (pos < r.visited_order.size() && r.visited_order[pos] != r.mean_indices[j]) {
                ++pos;
            }
            ASSERT_LT(pos, r.visited_order.size());
        }

        // Each accepted mean passes the test against its predecessors.
        for (std::size_t j = 1; j < r.k; ++j) {
            const double avg = average_distance(std::span(r.means).first(j), r.means[j]);
            if (config.strict_inequality) {
                EXPECT_GT(avg, r.threshold);
            } else {
                EXPECT_GE(avg, r.threshold);
            }
        }

        EXPECT_EQ(replay(d, r, config.strict_inequality), r.mean_indices);
        EXPECT_EQ(aim_initialize(d, config), r);
        EXPECT_EQ(r.threshold, distance_threshold(d, config.strategy));
    }
}

}  // namespace
}  // namespace aimkm
