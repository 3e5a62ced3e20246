#include "monutil/lp/polar.hpp"
#include "monutil/space/compactification.hpp"
#include "monutil/utility/penalty.hpp"
#include "monutil/utility/utility.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace monutil;

namespace {

space_ref line(std::size_t n) {
    std::vector<std::string> ids;
    std::vector<double> coords;
    for (std::size_t i = 0; i < n; ++i) {
        ids.push_back("p" + std::to_string(i));
        coords.push_back(double(i));
    }
    return make_line_space(ids, coords);
}

space_ref quarter_grid() {
    std::vector<double> coords{0.0, 0.25, 0.5, 0.75, 1.0};
    return make_line_space({"q0", "q1", "q2", "q3", "q4"}, coords);
}

} // namespace

TEST(CoherentEval, TwoDiracs) {
    auto s = line(2);
    auto set = scenario_set::full_simplex(s);
    auto e = coherent_eval(set, bounded_function(s, {2, 5}));
    EXPECT_EQ(e.value, 2.0);
    ASSERT_TRUE(e.minimizer.has_value());
    EXPECT_EQ(*e.minimizer, measure::dirac(s, 0));
}

TEST(CoherentEval, HalfSimplexAndTranslation) {
    auto s = line(2);
    auto u = utility::coherent(polar_scenario_set(acceptance_cone(s, {bounded_function(s, {1, -1})})));
    bounded_function f(s, {0, 1});
    auto e = u.eval(f);
    EXPECT_EQ(e.value, 0.0);
    EXPECT_EQ(e.minimizer->dense(), (std::vector<double>{1.0, 0.0}));
    EXPECT_NEAR(u(f + 3.7), 3.7, 1e-12);
}

TEST(CoherentEval, EmptySetIsUndefined) {
    auto s = line(2);
    auto set = polar_scenario_set(acceptance_cone(s, {bounded_function(s, {-1, -1})}));
    EXPECT_THROW(coherent_eval(set, bounded_function(s, {0, 0})), undefined_utility);
}

TEST(ConcaveEval, EntropicClosedFormAndGridSearch) {
    auto s = line(2);
    auto nu = measure::uniform(s);
    bounded_function f(s, {0, 2});
    auto e = concave_eval(penalty::entropic(1.0, nu), f);
    EXPECT_NEAR(e.value, std::log(2.0) - std::log(1.0 + std::exp(-2.0)), 1e-14);
    EXPECT_NEAR(e.value, 0.56622, 1e-5);
    auto w = e.minimizer->dense();
    EXPECT_NEAR(w[0], 0.8808, 1e-4);
    EXPECT_NEAR(w[1], 0.1192, 1e-4);
    // Independent route: minimize mu(f) + KL(mu | nu) over a fine grid.
    double best = infinity;
    for (int i = 0; i <= 100000; ++i) {
        const double p = i / 100000.0;
        auto mu = measure::from_dense(s, std::vector<double>{p, 1.0 - p});
        best = std::min(best, evaluate(mu, f) + kl_divergence(mu, nu));
    }
    EXPECT_NEAR(best, e.value, 1e-8);
}

TEST(ConcaveEval, EntropicLargeGammaApproachesMean) {
    auto s = line(2);
    auto u = utility::entropic(1e6, measure::uniform(s));
    EXPECT_NEAR(u(bounded_function(s, {0, 2})), 1.0, 1e-4);
    EXPECT_FALSE(u.is_coherent());
    EXPECT_EQ(u.name(), "entropic");
}

TEST(ConcaveEval, EntropicIsStableForLargeValues) {
    auto s = line(3);
    auto u = utility::entropic(0.01, measure::uniform(s));
    EXPECT_NEAR(u(bounded_function(s, {1000, 1001, 1002})), 1000.0 + 0.01 * std::log(3.0), 1e-9);
}

TEST(ConcaveEval, Tabulated) {
    auto s = line(2);
    auto c = penalty::tabulated({{measure::dirac(s, 0), 0.5}, {measure::dirac(s, 1), 0.0}});
    auto e = concave_eval(c, bounded_function(s, {1, 3}));
    EXPECT_EQ(e.value, 1.5);
    EXPECT_EQ(*e.minimizer, measure::dirac(s, 0));
    EXPECT_EQ(c(measure::dirac(s, 0)), 0.5);
    EXPECT_EQ(c(measure::uniform(s)), infinity);
}

TEST(ConcaveEval, IndicatorMatchesCoherent) {
    auto s = line(3);
    acceptance_cone cone(s, {bounded_function(s, {1, -1, 0.5})});
    auto set = polar_scenario_set(cone);
    auto c = penalty::indicator(set);
    bounded_function f(s, {0.3, -0.2, 0.9});
    EXPECT_EQ(concave_eval(c, f).value, coherent_eval(set, f).value);
    EXPECT_EQ(c(set.vertices()[0]), 0.0);
    EXPECT_EQ(c(measure::dirac(s, 1)), infinity);
}

TEST(Penalty, Rejections) {
    auto s = line(2);
    EXPECT_THROW(penalty::entropic(0.0, measure::uniform(s)), parameter_error);
    EXPECT_THROW(penalty::entropic(-1.0, measure::uniform(s)), parameter_error);
    EXPECT_THROW(penalty::tabulated({{measure::dirac(s, 0), 0.5}}), parameter_error);
    EXPECT_THROW(penalty::tabulated({{measure::dirac(s, 0), -0.5}, {measure::dirac(s, 1), 0.0}}), parameter_error);
    EXPECT_THROW(penalty::tabulated({}), undefined_utility);
}

TEST(ConjugatePenalty, Examples) {
    auto s = line(2);
    acceptance_cone cone(s, {bounded_function(s, {1, -1})});
    auto in = conjugate_penalty(cone, measure::dirac(s, 0));
    EXPECT_EQ(in.value, 0.0);
    EXPECT_FALSE(in.ray.has_value());
    auto out = conjugate_penalty(cone, measure::dirac(s, 1));
    EXPECT_EQ(out.value, infinity);
    ASSERT_TRUE(out.ray.has_value());
    EXPECT_NEAR((*out.ray)[0], 1.0, 1e-12);
    EXPECT_NEAR((*out.ray)[1], -1.0, 1e-12);

    acceptance_cone nonneg(s);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 20; ++t) {
        const double p = u(rng);
        EXPECT_EQ(conjugate_penalty(nonneg, measure::from_dense(s, std::vector<double>{p, 1 - p})).value, 0.0);
    }
}

TEST(ConjugatePenalty, RaysCertifyInfiniteValues) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> q(-8, 8);
    std::exponential_distribution<double> e(1.0);
    std::size_t infinite = 0;
    for (int t = 0; t < 40; ++t) {
        auto s = line(2 + t % 5);
        std::vector<bounded_function> gens;
        for (int k = 0; k < 1 + t % 3; ++k) {
            auto g = bounded_function::generate(s, [&](std::size_t) { return q(rng) / 8.0; });
            if (g.sup_norm() > 0) gens.push_back(g);
        }
        acceptance_cone cone(s, gens);
        auto set = polar_scenario_set(cone);
        std::vector<double> w(s->size());
        double sum = 0;
        for (auto& v : w) sum += (v = e(rng));
        for (auto& v : w) v /= sum;
        auto mu = measure::from_dense(s, w);
        auto c = conjugate_penalty(cone, mu);
        EXPECT_EQ(c.value == 0.0, set.contains(mu));
        if (c.value == infinity) {
            ++infinite;
            ASSERT_TRUE(c.ray.has_value());
            EXPECT_LT(evaluate(mu, *c.ray), 0.0);
            EXPECT_LE(c.ray->sup_norm(), 1.0 + 1e-9);
            EXPECT_TRUE(conic_membership(*c.ray, cone).member);
        }
    }
    EXPECT_GT(infinite, 0u);
}

TEST(AcceptanceTest, ExamplesAndBisection) {
    auto s = line(2);
    auto u = utility::worst_case(s);
    auto a = acceptance_test(u, bounded_function(s, {0.5, 1.0}), true);
    EXPECT_TRUE(a.accepted);
    EXPECT_NEAR(*a.recovered, 0.5, 1e-6);
    auto r = acceptance_test(u, bounded_function(s, {-0.25, 1.0}));
    EXPECT_FALSE(r.accepted);
    EXPECT_FALSE(r.recovered.has_value());

    auto ent = utility::entropic(0.7, measure::uniform(s));
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-3, 3);
    for (int t = 0; t < 30; ++t) {
        bounded_function f(s, {d(rng), d(rng)});
        auto res = acceptance_test(ent, f, true);
        EXPECT_NEAR(*res.recovered, ent(f), 1e-6);
        EXPECT_EQ(res.accepted, ent(f) >= -acceptance_tolerance);
    }
}

TEST(BorelExtension, Indicators) {
    auto s = quarter_grid();
    const std::vector<double> lower_half{1, 1, 1, 0, 0};
    EXPECT_EQ(borel_extension_eval(penalty::indicator(scenario_set::full_simplex(s)), lower_half), 0.0);
    auto point = scenario_set::from_vertices(s, {measure::dirac(s, 1)});
    EXPECT_EQ(borel_extension_eval(penalty::indicator(point), lower_half), 1.0);

    auto s2 = line(2);
    const std::vector<double> first{1, 0};
    EXPECT_NEAR(borel_extension_eval(penalty::entropic(1.0, measure::uniform(s2)), first),
                -std::log((std::exp(-1.0) + 1.0) / 2.0), 1e-14);
    EXPECT_NEAR(borel_extension_eval(penalty::entropic(1.0, measure::uniform(s2)), first), 0.37989, 1e-5);
}

TEST(WorstCase, Examples) {
    auto s = line(4);
    bounded_function f(s, {3, -1, 2, 0.5});
    EXPECT_EQ(worst_case_eval(f), -1.0);
    const std::vector<std::size_t> dom{0, 3};
    EXPECT_EQ(worst_case_eval(f, dom), 0.5);
    auto u = utility::worst_case(s, {3, 0});
    auto e = u.eval(f);
    EXPECT_EQ(e.value, 0.5);
    EXPECT_EQ(*e.minimizer, measure::dirac(s, 3));
    EXPECT_EQ(u.name(), "worst_case");
    EXPECT_TRUE(u.is_coherent());
}

TEST(BoundaryUtility, LimitsAlongApproach) {
    auto pair = sample_interval(99);
    std::vector<std::size_t> approach;
    for (std::size_t i = 90; i <= 99; ++i) approach.push_back(i);
    EXPECT_EQ(approach_limit(pair, approach), 100u);
    auto x = bounded_function::generate(pair.ambient, [&](std::size_t i) { return pair.ambient->label(i)[0]; });
    EXPECT_EQ(boundary_utility_eval(pair, approach, x), 1.0);
    EXPECT_EQ(boundary_utility_eval(pair, approach, bounded_function::constant(pair.ambient, 2.5)), 2.5);

    auto bumped = x + 3.0 * pair.bumps[1];
    auto u = utility::boundary(pair, approach);
    EXPECT_EQ(u(bumped - x), 3.0);
    EXPECT_EQ(u.eval(x).minimizer->entries().front().first, 100u);
    EXPECT_EQ(u.name(), "boundary");
}

TEST(BoundaryUtility, Rejections) {
    auto pair = sample_interval(99);
    std::vector<std::size_t> away{99, 95, 90};
    EXPECT_THROW(approach_limit(pair, away), extension_error);
    std::vector<std::size_t> with_boundary{98, 100};
    EXPECT_THROW(approach_limit(pair, with_boundary), extension_error);
    std::vector<std::size_t> single{99};
    EXPECT_THROW(utility::boundary(pair, single), extension_error);

    std::vector<std::size_t> approach;
    for (std::size_t i = 90; i <= 99; ++i) approach.push_back(i);
    auto oscillating = bounded_function::generate(pair.ambient, [](std::size_t i) { return i % 2 ? 0.0 : 1.0; });
    EXPECT_THROW(boundary_utility_eval(pair, approach, oscillating), extension_error);

    auto other = line(101);
    EXPECT_THROW(boundary_utility_eval(pair, approach, bounded_function::constant(other, 0.0)), space_mismatch);
}
