#include "aimkm/data.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "aimkm/errors.hpp"

namespace aimkm {
namespace {

Dataset parse(const std::string& text, CsvOptions options = {}) {
    std::istringstream in(text);
    return load_dataset(in, options);
}

TEST(LoadDataset, PlainRows) {
    const auto d = parse("1,2\n3,4");
    EXPECT_EQ(d.size(), 2u);
    EXPECT_EQ(d.dim(), 2u);
    EXPECT_EQ(d.copy_point(0), (Point{1, 2}));
    EXPECT_EQ(d.copy_point(1), (Point{3, 4}));
    EXPECT_TRUE(d.column_names().empty());
}

TEST(LoadDataset, HeaderRow) {
    const auto d = parse("x,y\n1,2\n", {.has_header = true});
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(d.dim(), 2u);
    EXPECT_EQ(d.column_names(), (std::vector<std::string>{"x", "y"}));
}

TEST(LoadDataset, RaggedRowNamesLine) {
    try {
        parse("1,2\n3");
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(LoadDataset, NonNumericCellNamesRowAndColumn) {
    try {
        parse("1,2\n3,abc\n");
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 2u);
    }
}

TEST(LoadDataset, EmptyInputs) {
    EXPECT_THROW(parse(""), DataError);
    EXPECT_THROW(parse("\n\n"), DataError);
    EXPECT_THROW(parse("a,b\n", {.has_header = true}), DataError);
}

TEST(LoadDataset, RejectsNonFinite) {
    EXPECT_THROW(parse("1,nan\n"), DataError);
    EXPECT_THROW(parse("inf,1\n"), DataError);
    EXPECT_THROW(parse("1e999,1\n"), DataError);
}

TEST(LoadDataset, HeaderWidthMustMatch) {
    EXPECT_THROW(parse("x,y,z\n1,2\n", {.has_header = true}), DataError);
}

TEST(LoadDataset, DelimiterWhitespaceAndCrLf) {
    const auto d = parse(" 1 ; -2.5 \r\n+3;4e2\r\n\n", {.delimiter = ';'});
    EXPECT_EQ(d.copy_point(0), (Point{1, -2.5}));
    EXPECT_EQ(d.copy_point(1), (Point{3, 400}));
}

TEST(LoadDataset, DuplicateRowsKept) {
    const auto d = parse("1,1\n1,1\n1,1\n");
    EXPECT_EQ(d.size(), 3u);
}

TEST(WriteDataset, Examples) {
    std::ostringstream out;
    write_dataset(Dataset::from_points(std::vector<Point>{{1, 2}}), out);
    EXPECT_EQ(out.str(), "1,2\n");

    std::ostringstream with_header;
    write_dataset(Dataset(2, {0.5, 3}, {"a", "b"}), with_header, ',', true);
    EXPECT_EQ(with_header.str(), "a,b\n0.5,3\n");

    std::ostringstream no_header;
    write_dataset(Dataset(2, {0.5, 3}, {"a", "b"}), no_header, ';', false);
    EXPECT_EQ(no_header.str(), "0.5;3\n");
}

TEST(WriteDataset, LoadedCsvRoundTrips) {
    const std::string text = "a,b\n0.1,-7\n1e-300,123456789.125\n";
    const auto d = parse(text, {.has_header = true});
    std::ostringstream out;
    write_dataset(d, out);
    EXPECT_EQ(parse(out.str(), {.has_header = true}), d);
}

TEST(DatasetProperty, RoundTripOfRandomValuesIsExact) {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + trial % 5;
        std::vector<double> values(dim * 20);
        for (auto& v : values) {
            v = std::ldexp(mantissa(gen), exponent(gen));
        }
        const Dataset d(dim, values);
        std::ostringstream out;
        write_dataset(d, out);
        EXPECT_EQ(parse(out.str()), d);
    }
}

TEST(Dataset, ConstructorValidates) {
    EXPECT_THROW(Dataset(2, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(Dataset(1, {NAN}), std::invalid_argument);
    EXPECT_THROW(Dataset(2, {1, 2}, {"only-one"}), std::invalid_argument);
    EXPECT_THROW(Dataset(0, {1}), std::invalid_argument);
    EXPECT_TRUE(Dataset().empty());
}

TEST(GenerateBlobs, ZeroStdPutsPointsOnCenters) {
    const auto blobs = generate_blobs({.blob_count = 3, .points_per_blob = 5, .dim = 2,
                                       .blob_std = 0.0, .separation = 4.0, .seed = 1});
    for (std::size_t i = 0; i < blobs.dataset.size(); ++i) {
        EXPECT_EQ(blobs.dataset.copy_point(i), blobs.centers[blobs.labels[i]]);
    }
}

TEST(GenerateBlobs, Deterministic) {
    const BlobSpec spec{.blob_count = 4, .points_per_blob = 30, .dim = 3, .blob_std = 1.5,
                        .separation = 6.0, .seed = 77};
    const auto a = generate_blobs(spec);
    const auto b = generate_blobs(spec);
    EXPECT_EQ(a.dataset, b.dataset);
    EXPECT_EQ(a.labels, b.labels);
    auto other = spec;
    other.seed = 78;
    EXPECT_NE(generate_blobs(other).dataset, a.dataset);
}

TEST(GenerateBlobs, Counts) {
    const auto blobs = generate_blobs({.blob_count = 4, .points_per_blob = 100, .dim = 2,
                                       .blob_std = 1.0, .separation = 10.0, .seed = 7});
    EXPECT_EQ(blobs.dataset.size(), 400u);
    std::vector<int> per(4, 0);
    for (auto l : blobs.labels) {
        ASSERT_LT(l, 4u);
        ++per[l];
    }
    EXPECT_EQ(per, (std::vector<int>{100, 100, 100, 100}));
}

TEST(GenerateBlobs, InvalidSpecThrows) {
    EXPECT_THROW(generate_blobs({.blob_count = 0}), std::invalid_argument);
    EXPECT_THROW(generate_blobs({.blob_count = 1, .points_per_blob = 1, .dim = 1,
                                 .blob_std = -1.0}),
                 std::invalid_argument);
}

TEST(GenerateBlobsProperty, CentersRespectSeparation) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const BlobSpec spec{.blob_count = 2 + seed % 9, .points_per_blob = 3, .dim = 1 + seed % 4,
                            .blob_std = 1.0, .separation = 0.5 + static_cast<double>(seed % 7) * 3.0,
                            .seed = seed};
        const auto blobs = generate_blobs(spec);
        ASSERT_EQ(blobs.centers.size(), spec.blob_count);
        for (std::size_t i = 0; i < blobs.centers.size(); ++i) {
            for (std::size_t j = i + 1; j < blobs.centers.size(); ++j) {
                EXPECT_GE(euclidean(blobs.centers[i], blobs.centers[j]), spec.separation);
            }
        }
    }
}

TEST(GenerateBlobsProperty, WrittenBlobsRoundTrip) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto blobs = generate_blobs({.blob_count = 3, .points_per_blob = 20,
                                           .dim = 1 + seed % 3, .blob_std = 2.0,
                                           .separation = 5.0, .seed = seed});
        std::ostringstream out;
        write_dataset(blobs.dataset, out);
        EXPECT_EQ(parse(out.str()), blobs.dataset);
    }
}

TEST(WriteLabels, SingleColumnWithHeader) {
    std::ostringstream out;
    const std::vector<std::size_t> labels{0, 2, 1};
    write_labels(labels, out);
    EXPECT_EQ(out.str(), "label\n0\n2\n1\n");
}

}  // namespace
}  // namespace aimkm
