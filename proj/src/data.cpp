#include "aimkm/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "aimkm/errors.hpp"
#include "aimkm/random.hpp"

namespace aimkm {

Dataset::Dataset(std::size_t dim, std::vector<double> values,
                 std::vector<std::string> column_names)
    : dim_(dim), values_(std::move(values)), column_names_(std::move(column_names)) {
    if (dim_ == 0) {
        if (!values_.empty()) {
            throw std::invalid_argument("dataset with values must have dim >= 1");
        }
    } else if (values_.size() % dim_ != 0) {
        throw std::invalid_argument("value count is not a multiple of the dimension");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("dataset values must be finite");
        }
    }
    if (!column_names_.empty() && column_names_.size() != dim_) {
        throw std::invalid_argument("column name count does not match the dimension");
    }
    n_ = dim_ == 0 ? 0 : values_.size() / dim_;
}

Dataset Dataset::from_points(std::span<const Point> points,
                             std::vector<std::string> column_names) {
    if (points.empty()) {
        return Dataset(column_names.size(), {}, std::move(column_names));
    }
    const std::size_t dim = points.front().size();
    std::vector<double> values;
    values.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw std::invalid_argument("points have differing dimensions");
        }
        values.insert(values.end(), p.begin(), p.end());
    }
    return Dataset(dim, std::move(values), std::move(column_names));
}

Point Dataset::copy_point(std::size_t i) const {
    const auto p = point(i);
    return Point(p.begin(), p.end());
}

Point centroid_of(const Dataset& dataset) {
    if (dataset.empty()) {
        throw std::invalid_argument("centroid of an empty dataset");
    }
    CentroidAccumulator acc(dataset.dim());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        acc.add(dataset.point(i));
    }
    return acc.mean();
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

double parse_cell(std::string_view cell, std::size_t line, std::size_t column) {
    // from_chars rejects a leading '+', which is otherwise valid numeric text.
    std::string_view text = cell;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw DataError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": not a number: '" + std::string(cell) + "'",
                        line, column);
    }
    if (!std::isfinite(value)) {
        throw DataError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                            ": non-finite value '" + std::string(cell) + "'",
                        line, column);
    }
    return value;
}

void write_double(std::ostream& sink, double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw IoError("failed to format value");
    }
    sink.write(buf, ptr - buf);
}

}  // namespace

Dataset load_dataset(std::istream& source, const CsvOptions& options) {
    std::vector<std::string> names;
    std::vector<double> values;
    std::size_t dim = 0;
    bool have_header = false;
    bool have_rows = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(source, raw)) {
        ++line_no;
        if (trim(raw).empty()) {
            continue;
        }
        const auto fields = split(raw, options.delimiter);
        if (options.has_header && !have_header) {
            for (auto f : fields) {
                names.emplace_back(f);
            }
            dim = fields.size();
            have_header = true;
            continue;
        }
        if (!have_rows && !have_header) {
            dim = fields.size();
        }
        if (fields.size() != dim) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                                std::to_string(dim) + " fields, found " +
                                std::to_string(fields.size()),
                            line_no);
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            values.push_back(parse_cell(fields[c], line_no, c + 1));
        }
        have_rows = true;
    }
    if (source.bad()) {
        throw IoError("read failure");
    }
    if (!have_rows) {
        throw DataError("no data rows in input");
    }
    return Dataset(dim, std::move(values), std::move(names));
}

void write_dataset(const Dataset& dataset, std::ostream& sink, char delimiter, bool header) {
    if (header && !dataset.column_names().empty()) {
        const auto& names = dataset.column_names();
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (c > 0) {
                sink.put(delimiter);
            }
            sink << names[c];
        }
        sink.put('\n');
    }
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const auto p = dataset.point(i);
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (d > 0) {
                sink.put(delimiter);
            }
            write_double(sink, p[d]);
        }
        sink.put('\n');
    }
    if (!sink) {
        throw IoError("write failure");
    }
}

void write_labels(std::span<const std::size_t> labels, std::ostream& sink) {
    sink << "label\n";
    for (auto l : labels) {
        sink << l << '\n';
    }
    if (!sink) {
        throw IoError("write failure");
    }
}

namespace {

std::vector<Point> place_centers(const BlobSpec& spec, Rng& rng) {
    constexpr int kAttemptsPerCenter = 1000;
    const double per_axis =
        std::ceil(std::pow(static_cast<double>(spec.blob_count), 1.0 / static_cast<double>(spec.dim)));
    double side = 2.0 * std::max(spec.separation, 1.0) * per_axis;

    while (true) {
        std::vector<Point> centers;
        bool failed = false;
        while (centers.size() < spec.blob_count && !failed) {
            int attempt = 0;
            for (; attempt < kAttemptsPerCenter; ++attempt) {
                Point c(spec.dim);
                for (auto& x : c) {
                    x = side * rng.uniform01();
                }
                bool ok = true;
                for (const auto& other : centers) {
                    if (euclidean(c, other) < spec.separation) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    centers.push_back(std::move(c));
                    break;
                }
            }
            failed = attempt == kAttemptsPerCenter;
        }
        if (!failed) {
            return centers;
        }
        side *= 1.5;
    }
}

}  // namespace

BlobData generate_blobs(const BlobSpec& spec) {
    if (spec.blob_count < 1 || spec.points_per_blob < 1 || spec.dim < 1) {
        throw std::invalid_argument("blob_count, points_per_blob and dim must be >= 1");
    }
    if (!(spec.blob_std >= 0.0) || !(spec.separation >= 0.0) || !std::isfinite(spec.blob_std) ||
        !std::isfinite(spec.separation)) {
        throw std::invalid_argument("blob_std and separation must be finite and >= 0");
    }

    Rng center_rng(derive_seed(spec.seed, 0));
    Rng point_rng(derive_seed(spec.seed, 1));

    BlobData out;
    out.centers = place_centers(spec, center_rng);

    std::vector<double> values;
    values.reserve(spec.blob_count * spec.points_per_blob * spec.dim);
    out.labels.reserve(spec.blob_count * spec.points_per_blob);
    for (std::size_t b = 0; b < spec.blob_count; ++b) {
        const auto& center = out.centers[b];
        for (std::size_t i = 0; i < spec.points_per_blob; ++i) {
            for (std::size_t d = 0; d < spec.dim; ++d) {
                values.push_back(center[d] + spec.blob_std * point_rng.normal());
            }
            out.labels.push_back(b);
        }
    }
    out.dataset = Dataset(spec.dim, std::move(values));
    return out;
}

}  // namespace aimkm
