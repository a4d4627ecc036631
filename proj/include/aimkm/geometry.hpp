#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aimkm {

/// A point in attribute space. Coordinates are unitless and finite.
using Point = std::vector<double>;
using PointView = std::span<const double>;

/// Euclidean distance. Throws std::invalid_argument on dimension mismatch.
double euclidean(PointView a, PointView b);

/// Squared Euclidean distance, computed without the square root.
double squared_euclidean(PointView a, PointView b);

/// Running coordinatewise mean.
///
/// Points are accumulated left to right as offsets from the first point
/// added, so the mean of identical points is exactly that point and the
/// result is reproducible for a fixed insertion order.
class CentroidAccumulator {
public:
    explicit CentroidAccumulator(std::size_t dim) : dim_(dim), sums_(dim, 0.0) {}

    void add(PointView p);

    std::size_t count() const { return count_; }
    std::size_t dim() const { return dim_; }

    /// Mean of everything added so far. Throws if nothing was added.
    Point mean() const;

private:
    std::size_t dim_;
    std::size_t count_ = 0;
    Point origin_;
    std::vector<double> sums_;
};

/// Coordinatewise arithmetic mean. Throws std::invalid_argument when
/// `points` is empty or dimensions disagree.
Point centroid_of(std::span<const Point> points);

}  // namespace aimkm
