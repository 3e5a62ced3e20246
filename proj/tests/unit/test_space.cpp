#include "monutil/space/compactification.hpp"
#include "monutil/space/metric_space.hpp"
#include "monutil/space/path_space.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace monutil;

namespace {

std::vector<std::vector<double>> line_matrix(std::size_t n) {
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = std::abs(double(i) - double(j));
    return d;
}

bool has(const metric_report& r, metric_axiom a, std::vector<std::size_t> w) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const metric_violation& v) { return v.axiom == a && v.witness == w; });
}

} // namespace

TEST(ValidateMetric, LineIsAMetric) { EXPECT_TRUE(validate_metric(line_matrix(3)).ok()); }

TEST(ValidateMetric, TriangleViolationNamesTriple) {
    auto d = line_matrix(3);
    d[0][2] = d[2][0] = 3.0;
    auto r = validate_metric(d);
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(has(r, metric_axiom::triangle, {0, 1, 2}));
    for (const auto& v : r.violations) EXPECT_EQ(v.axiom, metric_axiom::triangle);
}

TEST(ValidateMetric, AsymmetryNamesPair) {
    auto d = line_matrix(3);
    d[1][0] = 2.0;
    auto r = validate_metric(d);
    EXPECT_TRUE(has(r, metric_axiom::symmetry, {0, 1}));
}

TEST(ValidateMetric, NonSquareIsStructural) {
    std::vector<std::vector<double>> d{{0, 1}, {1}};
    EXPECT_THROW(validate_metric(d), structural_error);
    EXPECT_THROW(metric_space({"a", "b"}, {0, 1, 1}), structural_error);
}

TEST(ValidateMetric, ZeroOffDiagonalAndNonzeroDiagonal) {
    auto d = line_matrix(3);
    d[0][1] = d[1][0] = 0.0;
    d[2][2] = 0.5;
    auto r = validate_metric(d);
    EXPECT_TRUE(has(r, metric_axiom::positivity, {0, 1}));
    EXPECT_TRUE(has(r, metric_axiom::diagonal, {2, 2}));
}

TEST(MakeMetricSpace, RejectsInvalid) {
    EXPECT_THROW(make_metric_space({"a", "b"}, {0, 1, 2, 0}), structural_error);
    EXPECT_THROW(make_metric_space({"a", "a"}, {0, 1, 1, 0}), structural_error);
}

TEST(SampleInterval, ThreePoints) {
    auto pair = sample_interval(3);
    const auto& m = *pair.ambient;
    ASSERT_EQ(m.size(), 5u);
    EXPECT_EQ(pair.interior, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_DOUBLE_EQ(m.label(1)[0], 0.25);
    EXPECT_DOUBLE_EQ(m.label(2)[0], 0.5);
    EXPECT_DOUBLE_EQ(m.label(3)[0], 0.75);
    ASSERT_EQ(pair.boundary_sets.size(), 2u);
    EXPECT_EQ(m.label(pair.boundary_sets[0][0])[0], 0.0);
    EXPECT_EQ(m.label(pair.boundary_sets[1][0])[0], 1.0);
    EXPECT_DOUBLE_EQ(m(1, 3), 0.5);
}

TEST(SampleInterval, NoBoundaryIsPlainWrapper) {
    auto pair = sample_interval(2, false);
    EXPECT_EQ(pair.ambient->size(), 2u);
    EXPECT_TRUE(pair.boundary_sets.empty());
    EXPECT_TRUE(pair.bumps.empty());
}

TEST(SampleInterval, NinetyNinePointsSatisfyInvariants) {
    auto pair = sample_interval(99);
    EXPECT_EQ(pair.interior.size(), 99u);
    EXPECT_TRUE(validate_metric(*pair.ambient).ok());
    EXPECT_TRUE(validate_pair(pair).empty());
    for (std::size_t n = 0; n < pair.bumps.size(); ++n) {
        double interior_max = 0.0;
        for (auto x : pair.interior) interior_max = std::max(interior_max, pair.bumps[n][x]);
        EXPECT_LT(interior_max, 1.0);
        for (auto b : pair.boundary_sets[n]) EXPECT_EQ(pair.bumps[n][b], 1.0);
    }
}

TEST(SampleInterval, TooFewPoints) { EXPECT_THROW(sample_interval(1), parameter_error); }

TEST(BoundaryBump, DistanceConstruction) {
    auto pair = sample_interval(3);
    auto phi = build_boundary_bump(pair, 1, 1.0);
    EXPECT_DOUBLE_EQ(phi[2], 0.5); // 1 - |0.5 - 1|
    EXPECT_EQ(phi[4], 1.0);
    EXPECT_EQ(phi[0], 0.0);
    auto both = combined_boundary_bump(pair, 1.0);
    EXPECT_DOUBLE_EQ(both[1], 0.75); // 1 - min(0.25, 0.75)
}

TEST(BoundaryBump, RejectsBadScale) {
    auto pair = sample_interval(3);
    EXPECT_THROW(build_boundary_bump(pair, 0, 0.0), parameter_error);
    EXPECT_THROW(build_boundary_bump(pair, 0, -1.0), parameter_error);
    EXPECT_THROW(build_boundary_bump(pair, 5, 1.0), parameter_error);
}

TEST(BoundaryBump, GapGuardKeepsInteriorBelowOne) {
    // An interior point so close to the boundary that 1 - d/scale rounds to 1.
    std::vector<double> coords{0.0, 1e-18, 0.5};
    auto space = make_line_space({"b", "x", "y"}, coords);
    auto pair = make_compactification_pair(space, {1, 2}, {{0}});
    EXPECT_EQ(pair.bumps[0][0], 1.0);
    EXPECT_LT(pair.bumps[0][1], 1.0);
    EXPECT_TRUE(validate_pair(pair).empty());
}

TEST(CompactificationPair, PartitionErrors) {
    auto space = make_line_space({"a", "b", "c"}, std::vector<double>{0, 1, 2});
    EXPECT_THROW(make_compactification_pair(space, {}, {{0, 1, 2}}), parameter_error);
    EXPECT_THROW(make_compactification_pair(space, {0}, {{1}, {1, 2}}), parameter_error);
    EXPECT_THROW(make_compactification_pair(space, {0}, {{1}}), parameter_error);
}

TEST(DistToSet, Examples) {
    auto space = make_line_space({"0", "1", "2"}, std::vector<double>{0, 1, 2});
    std::vector<std::size_t> s2{2}, s02{0, 2}, s1{1};
    EXPECT_EQ(dist_to_set(*space, 1, s1), 0.0);
    EXPECT_EQ(dist_to_set(*space, 0, s2), 2.0);
    EXPECT_EQ(dist_to_set(*space, 1, s02), 1.0);
    EXPECT_THROW(dist_to_set(*space, 1, std::span<const std::size_t>{}), parameter_error);
}

TEST(SamplePaths, SupDistanceOfExplicitPaths) {
    std::vector<double> p{0, 1, 2}, q{0, 0, 0};
    EXPECT_EQ(sup_distance(p, q), 2.0);
}

TEST(SamplePaths, DuplicatesAreSeparated) {
    auto space = make_path_space({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 3);
    EXPECT_TRUE(validate_metric(*space).ok());
    EXPECT_GT((*space)(0, 1), 0.0);
    EXPECT_LT((*space)(0, 1), 1e-8);
}

TEST(SamplePaths, DeterministicAndMetric) {
    auto a = sample_paths(10, 5, 42);
    auto b = sample_paths(10, 5, 42);
    ASSERT_EQ(a->size(), 10u);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ((*a)(i, j), (*b)(i, j));
    EXPECT_TRUE(validate_metric(*a).ok());
    // The sup metric dominates the terminal difference.
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            EXPECT_GE((*a)(i, j), std::abs(a->label(i).back() - a->label(j).back()));
    EXPECT_THROW(sample_paths(0, 5, 1), parameter_error);
    EXPECT_THROW(sample_paths(3, 0, 1), parameter_error);
}
