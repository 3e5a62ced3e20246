#include "monutil/measure/measure.hpp"
#include "monutil/space/metric_space.hpp"

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

measure random_measure(const space_ref& s, std::mt19937_64& rng, bool full_support = true) {
    std::exponential_distribution<double> e(1.0);
    std::bernoulli_distribution keep(0.6);
    std::vector<double> w(s->size());
    double sum = 0.0;
    for (auto& v : w) {
        v = (full_support || keep(rng)) ? e(rng) : 0.0;
        sum += v;
    }
    if (sum == 0.0) {
        w[0] = 1.0;
        sum = 1.0;
    }
    for (auto& v : w) v /= sum;
    return measure::from_dense(s, w);
}

} // namespace

TEST(Measure, Evaluate) {
    auto s = line(2);
    bounded_function f(s, {0, 4});
    EXPECT_EQ(evaluate(measure::dirac(s, 1), f), 4.0);
    EXPECT_EQ(evaluate(measure::uniform(s), f), 2.0);
    auto mu = measure::from_dense(s, std::vector<double>{0.3, 0.7});
    EXPECT_DOUBLE_EQ(evaluate(mu, bounded_function::constant(s, -1.25)), -1.25);
    EXPECT_THROW(evaluate(mu, bounded_function::constant(line(2), 0.0)), space_mismatch);
}

TEST(Measure, ConstructionRules) {
    auto s = line(3);
    EXPECT_THROW(measure(s, {{0, 0.5}, {1, 0.4}}), parameter_error);
    EXPECT_THROW(measure(s, {{0, 1.5}, {1, -0.5}}), parameter_error);
    EXPECT_THROW(measure(s, {{0, 0.5}, {0, 0.5}}), parameter_error);
    EXPECT_THROW(measure(s, {{7, 1.0}}), parameter_error);
    measure tiny(s, {{0, 1e-15}, {1, 1.0 - 1e-15}});
    EXPECT_EQ(support(tiny), std::vector<std::size_t>{1});
    measure near(s, {{0, 0.5}, {1, 0.5 + 5e-13}});
    EXPECT_DOUBLE_EQ(near.weight(0) + near.weight(1), 1.0);
}

TEST(Measure, Support) {
    auto s = line(3);
    EXPECT_EQ(support(measure::dirac(s, 2)), std::vector<std::size_t>{2});
    EXPECT_EQ(support(measure(s, {{2, 0.5}, {0, 0.5}})), (std::vector<std::size_t>{0, 2}));
}

TEST(KlDivergence, Examples) {
    auto s = line(2);
    auto u = measure::uniform(s);
    EXPECT_EQ(kl_divergence(u, u), 0.0);
    EXPECT_DOUBLE_EQ(kl_divergence(measure::dirac(s, 0), u), std::log(2.0));
    EXPECT_TRUE(std::isinf(kl_divergence(u, measure::dirac(s, 0))));
}

TEST(KlDivergence, GibbsInequality) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        auto s = line(2 + t % 5);
        auto mu = random_measure(s, rng, false), nu = random_measure(s, rng);
        const double d = kl_divergence(mu, nu);
        EXPECT_GE(d, 0.0);
        if (!(mu == nu)) {
            EXPECT_GT(d, 0.0);
        }
        EXPECT_EQ(kl_divergence(nu, nu), 0.0);
    }
}

TEST(Measure, PairingIsBoundedAffineAndLinear) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 200; ++t) {
        auto s = line(5);
        auto f = bounded_function::generate(s, [&](std::size_t) { return u(rng); });
        auto g = bounded_function::generate(s, [&](std::size_t) { return u(rng); });
        auto mu = random_measure(s, rng), nu = random_measure(s, rng);
        EXPECT_LE(std::abs(evaluate(mu, f)), f.sup_norm() + 1e-12);
        EXPECT_NEAR(evaluate(mu, 2.0 * f + g), 2.0 * evaluate(mu, f) + evaluate(mu, g), 1e-12);
        const double t_ = 0.3;
        std::vector<double> mix(5);
        for (std::size_t i = 0; i < 5; ++i) mix[i] = t_ * mu.weight(i) + (1 - t_) * nu.weight(i);
        EXPECT_NEAR(evaluate(measure::from_dense(s, mix), f), t_ * evaluate(mu, f) + (1 - t_) * evaluate(nu, f), 1e-12);
    }
}

TEST(WeakstarGap, DyadicApproach) {
    std::vector<std::string> ids;
    std::vector<double> coords;
    for (int k = 1; k <= 10; ++k) {
        ids.push_back("a" + std::to_string(k));
        coords.push_back(1.0 - std::ldexp(1.0, -k));
    }
    ids.push_back("one");
    coords.push_back(1.0);
    auto s = make_line_space(ids, coords);
    std::vector<measure> mus;
    for (std::size_t k = 0; k < 10; ++k) mus.push_back(measure::dirac(s, k));
    auto target = measure::dirac(s, 10);
    test_dictionary id({bounded_function(s, coords)});
    auto gaps = weakstar_gap(mus, target, id);
    for (int k = 1; k <= 10; ++k) EXPECT_EQ(gaps[k - 1], std::ldexp(1.0, -k));

    EXPECT_EQ(weakstar_gap(std::vector<measure>(3, target), target, id), std::vector<double>(3, 0.0));
    test_dictionary constants({bounded_function::constant(s, 0.7), bounded_function::constant(s, -3.0)});
    for (double g : weakstar_gap(mus, target, constants)) EXPECT_EQ(g, 0.0);
    EXPECT_THROW(test_dictionary({}), parameter_error);
    for (const auto& f : constants.probes()) EXPECT_LE(f.sup_norm(), 1.0);
}
