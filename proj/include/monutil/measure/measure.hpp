#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/space/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace monutil {

/// Weights at or below this magnitude are dropped at construction.
inline constexpr double weight_prune_threshold = 1e-14;
/// Largest deviation of the weight sum from 1 that is silently renormalized.
inline constexpr double weight_sum_tolerance = 1e-12;

/// A finitely supported probability measure on a space.
class measure {
  public:
    using entry = std::pair<std::size_t, double>;

    measure(space_ref space, std::vector<entry> weights) : space_(std::move(space)) {
        if (!space_) throw parameter_error("measure: null space");
        std::sort(weights.begin(), weights.end());
        double sum = 0.0;
        for (const auto& [i, w] : weights) {
            if (i >= space_->size()) throw parameter_error("measure: point index out of range");
            if (!std::isfinite(w)) throw parameter_error("measure: non-finite weight");
            if (w < -weight_prune_threshold) throw parameter_error("measure: negative weight");
            if (w <= weight_prune_threshold) continue;
            if (!weights_.empty() && weights_.back().first == i)
                throw parameter_error("measure: point listed twice");
            weights_.emplace_back(i, w);
            sum += w;
        }
        if (std::abs(sum - 1.0) > weight_sum_tolerance)
            throw parameter_error("measure: weights sum to " + std::to_string(sum) + ", not 1");
        if (sum != 1.0)
            for (auto& e : weights_) e.second /= sum;
    }

    static measure dirac(space_ref space, std::size_t x) { return {std::move(space), {{x, 1.0}}}; }

    static measure uniform(space_ref space, std::span<const std::size_t> points) {
        if (points.empty()) throw parameter_error("measure::uniform: empty support");
        std::vector<entry> w;
        for (auto p : points) w.emplace_back(p, 1.0 / static_cast<double>(points.size()));
        return {std::move(space), std::move(w)};
    }

    static measure uniform(space_ref space) {
        std::vector<std::size_t> all(space->size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return uniform(std::move(space), all);
    }

    /// From one weight per point. Tiny deviations from the simplex (as produced
    /// by floating-point solvers) are absorbed by pruning and renormalization.
    static measure from_dense(space_ref space, std::span<const double> dense) {
        if (dense.size() != space->size()) throw structural_error("measure: dense weight count mismatch");
        std::vector<entry> w;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0.0) w.emplace_back(i, dense[i]);
        return {std::move(space), std::move(w)};
    }

    const space_ref& space() const noexcept { return space_; }
    std::span<const entry> entries() const noexcept { return weights_; }

    double weight(std::size_t x) const {
        auto it = std::lower_bound(weights_.begin(), weights_.end(), entry{x, -1.0});
        return it != weights_.end() && it->first == x ? it->second : 0.0;
    }

    std::vector<double> dense() const {
        std::vector<double> out(space_->size(), 0.0);
        for (const auto& [i, w] : weights_) out[i] = w;
        return out;
    }

    bool operator==(const measure& o) const { return space_ == o.space_ && weights_ == o.weights_; }

  private:
    space_ref space_;
    std::vector<entry> weights_;
};

/// mu(f) = sum_i w_i f(x_i).
inline double evaluate(const measure& mu, const bounded_function& f) {
    if (mu.space() != f.space()) throw space_mismatch("evaluate: measure and function on different spaces");
    double s = 0.0;
    for (const auto& [i, w] : mu.entries()) s += w * f[i];
    return s;
}

/// Points carrying strictly positive weight.
inline std::vector<std::size_t> support(const measure& mu) {
    std::vector<std::size_t> out;
    for (const auto& e : mu.entries()) out.push_back(e.first);
    return out;
}

/// sum over supp(mu) of mu_i ln(mu_i / nu_i); +infinity when mu is not
/// absolutely continuous with respect to nu.
inline double kl_divergence(const measure& mu, const measure& nu) {
    if (mu.space() != nu.space()) throw space_mismatch("kl_divergence: measures on different spaces");
    double s = 0.0;
    for (const auto& [i, w] : mu.entries()) {
        const double v = nu.weight(i);
        if (v == 0.0) return std::numeric_limits<double>::infinity();
        s += w * std::log(w / v);
    }
    return std::max(s, 0.0);
}

/// Probe functions for the weak* surrogate, each scaled to sup-norm <= 1.
class test_dictionary {
  public:
    explicit test_dictionary(std::vector<bounded_function> probes) {
        if (probes.empty()) throw parameter_error("test_dictionary: empty dictionary");
        for (auto& f : probes) {
            const double n = f.sup_norm();
            probes_.push_back(n > 1.0 ? (1.0 / n) * f : std::move(f));
        }
    }
    std::span<const bounded_function> probes() const noexcept { return probes_; }

  private:
    std::vector<bounded_function> probes_;
};

/// Per k, max over the dictionary of |mu_k(f) - target(f)|.
inline std::vector<double> weakstar_gap(std::span<const measure> mus, const measure& target,
                                        const test_dictionary& dict) {
    std::vector<double> gaps;
    gaps.reserve(mus.size());
    for (const auto& mu : mus) {
        double g = 0.0;
        for (const auto& f : dict.probes()) g = std::max(g, std::abs(evaluate(mu, f) - evaluate(target, f)));
        gaps.push_back(g);
    }
    return gaps;
}

} // namespace monutil
