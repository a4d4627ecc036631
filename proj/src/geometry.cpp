#include "aimkm/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aimkm {

namespace {

void require_same_dim(PointView a, PointView b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

double squared_euclidean(PointView a, PointView b) {
    require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sum += diff * diff;
    }
    return sum;
}

double euclidean(PointView a, PointView b) {
    return std::sqrt(squared_euclidean(a, b));
}

void CentroidAccumulator::add(PointView p) {
    if (p.size() != dim_) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(p.size()) +
                                    " vs " + std::to_string(dim_));
    }
    if (count_ == 0) {
        origin_.assign(p.begin(), p.end());
    }
    for (std::size_t d = 0; d < dim_; ++d) {
        sums_[d] += p[d] - origin_[d];
    }
    ++count_;
}

Point CentroidAccumulator::mean() const {
    if (count_ == 0) {
        throw std::invalid_argument("centroid of an empty point set");
    }
    Point out(dim_);
    const double n = static_cast<double>(count_);
    for (std::size_t d = 0; d < dim_; ++d) {
        out[d] = origin_[d] + sums_[d] / n;
    }
    return out;
}

Point centroid_of(std::span<const Point> points) {
    if (points.empty()) {
        throw std::invalid_argument("centroid of an empty point set");
    }
    CentroidAccumulator acc(points.front().size());
    for (const auto& p : points) {
        acc.add(p);
    }
    return acc.mean();
}

}  // namespace aimkm
