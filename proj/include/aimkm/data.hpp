#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aimkm/geometry.hpp"

namespace aimkm {

/// n points of M finite attributes, stored row-major. Rows are distinct
/// objects even when their values coincide.
class Dataset {
public:
    Dataset() = default;

    /// Takes `values` as n*dim row-major coordinates. Throws
    /// std::invalid_argument if dim is 0 while values are present, if the
    /// buffer is not a whole number of rows, if any value is non-finite, or
    /// if column_names is non-empty with a size other than dim.
    Dataset(std::size_t dim, std::vector<double> values,
            std::vector<std::string> column_names = {});

    static Dataset from_points(std::span<const Point> points,
                               std::vector<std::string> column_names = {});

    std::size_t size() const { return n_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return n_ == 0; }

    PointView point(std::size_t i) const { return {values_.data() + i * dim_, dim_}; }
    Point copy_point(std::size_t i) const;

    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& column_names() const { return column_names_; }

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::size_t dim_ = 0;
    std::size_t n_ = 0;
    std::vector<double> values_;
    std::vector<std::string> column_names_;
};

/// Global centroid of all rows. Throws std::invalid_argument when empty.
Point centroid_of(const Dataset& dataset);

struct CsvOptions {
    bool has_header = false;
    char delimiter = ',';
};

/// Parses numeric CSV. Blank lines are skipped; '\r' line endings and
/// surrounding spaces in a field are tolerated. Throws DataError for empty
/// input, ragged rows, and non-numeric or non-finite cells (with the 1-based
/// line and column), and IoError if the stream fails.
Dataset load_dataset(std::istream& source, const CsvOptions& options = {});

/// Writes each value in its shortest round-trip decimal form. The header row
/// is emitted only when `header` is set and the dataset has column names.
void write_dataset(const Dataset& dataset, std::ostream& sink, char delimiter = ',',
                   bool header = true);

/// Single-column CSV with a `label` header.
void write_labels(std::span<const std::size_t> labels, std::ostream& sink);

struct BlobSpec {
    std::size_t blob_count = 1;
    std::size_t points_per_blob = 1;
    std::size_t dim = 2;
    double blob_std = 1.0;
    /// Minimum pairwise distance between blob centers.
    double separation = 0.0;
    std::uint64_t seed = 0;
};

struct BlobData {
    Dataset dataset;
    /// Blob index of each row.
    std::vector<std::size_t> labels;
    std::vector<Point> centers;
};

/// Isotropic Gaussian blobs. Centers are drawn uniformly in a cube sized from
/// the separation and rejected until every pair is at least `separation`
/// apart; the cube grows if placement keeps failing. Points are laid out blob
/// by blob. Output is a pure function of the spec.
BlobData generate_blobs(const BlobSpec& spec);

}  // namespace aimkm
