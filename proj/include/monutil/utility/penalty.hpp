#pragma once

#include "monutil/core/error.hpp"
#include "monutil/lp/acceptance_cone.hpp"
#include "monutil/lp/polar.hpp"
#include "monutil/lp/simplex.hpp"
#include "monutil/measure/measure.hpp"
#include "monutil/utility/scenario_set.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace monutil {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// A penalty c on probability measures, +infinity off its effective domain.
///
/// Tabulated penalties list finitely many (measure, value) pairs; the utility
/// they induce is an outer approximation of the full infimum over P(X).
class penalty {
  public:
    struct indicator_kind {
        scenario_set set;
    };
    struct entropic_kind {
        double gamma;
        measure reference;
    };
    struct tabulated_kind {
        std::vector<std::pair<measure, double>> entries;
    };
    using kind_type = std::variant<indicator_kind, entropic_kind, tabulated_kind>;

    static penalty indicator(scenario_set set) { return penalty(indicator_kind{std::move(set)}); }

    static penalty entropic(double gamma, measure reference) {
        if (!(gamma > 0.0) || !std::isfinite(gamma)) throw parameter_error("entropic penalty: gamma must be positive");
        return penalty(entropic_kind{gamma, std::move(reference)});
    }

    /// Values must be nonnegative with minimum exactly 0, so that u(0) = 0.
    static penalty tabulated(std::vector<std::pair<measure, double>> entries) {
        if (entries.empty()) throw undefined_utility("tabulated penalty: empty domain");
        double lowest = infinity;
        for (const auto& [mu, c] : entries) {
            if (mu.space() != entries.front().first.space())
                throw space_mismatch("tabulated penalty: entries on different spaces");
            if (!(c >= 0.0) || !std::isfinite(c)) throw parameter_error("tabulated penalty: values must be finite and >= 0");
            lowest = std::min(lowest, c);
        }
        if (lowest != 0.0) throw parameter_error("tabulated penalty: minimum value must be 0");
        return penalty(tabulated_kind{std::move(entries)});
    }

    const kind_type& kind() const noexcept { return kind_; }

    const space_ref& space() const {
        return std::visit(
            [](const auto& k) -> const space_ref& {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, indicator_kind>)
                    return k.set.space();
                else if constexpr (std::is_same_v<K, entropic_kind>)
                    return k.reference.space();
                else
                    return k.entries.front().first.space();
            },
            kind_);
    }

    /// c(mu).
    double operator()(const measure& mu) const {
        return std::visit(
            [&](const auto& k) -> double {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, indicator_kind>) {
                    return k.set.contains(mu) ? 0.0 : infinity;
                } else if constexpr (std::is_same_v<K, entropic_kind>) {
                    return k.gamma * kl_divergence(mu, k.reference);
                } else {
                    for (const auto& [m, c] : k.entries)
                        if (m == mu) return c;
                    return infinity;
                }
            },
            kind_);
    }

  private:
    explicit penalty(kind_type k) : kind_(std::move(k)) {}
    kind_type kind_;
};

struct conjugate_value {
    /// 0 when mu lies in the polar of the cone, +infinity otherwise.
    double value = 0.0;
    /// An acceptable f with mu(f) < 0 and sup-norm <= 1; t f is a ray along
    /// which mu(-t f) grows without bound.
    std::optional<bounded_function> ray;
};

/// c(mu) = sup over the acceptance cone of mu(-f).
///
/// The cone is scaled by the probe ||f|| <= 1 and the LP
/// max mu(-f) s.t. f = sum l_j g_j + s, l, s >= 0, -1 <= f <= 1 is solved.
/// A positive optimum makes the supremum over the full cone infinite.
inline conjugate_value conjugate_penalty(const acceptance_cone& cone, const measure& mu) {
    if (mu.space() != cone.space()) throw space_mismatch("conjugate_penalty: measure on a different space");
    const std::size_t n = cone.space()->size(), k = cone.generators().size();
    const auto w = mu.dense();
    // Variables: l_1..l_k, s_1..s_n. Objective: min mu(f) = sum_j l_j mu(g_j) + sum_x w_x s_x.
    std::vector<double> cost(k + n);
    for (std::size_t j = 0; j < k; ++j) cost[j] = evaluate(mu, cone.generators()[j]);
    for (std::size_t x = 0; x < n; ++x) cost[k + x] = w[x];
    lp::linear_program<double> prog(cost);
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<double> row(k + n, 0.0);
        for (std::size_t j = 0; j < k; ++j) row[j] = cone.generators()[j][x];
        row[k + x] = 1.0;
        prog.add(row, lp::sense::less_equal, 1.0);
        prog.add(std::move(row), lp::sense::greater_equal, -1.0);
    }
    auto r = lp::solve_min(prog);
    if (r.status != lp::status::optimal) throw error("conjugate_penalty: solver returned " + std::string(lp::to_string(r.status)));
    if (-r.value <= membership_tolerance) return {0.0, std::nullopt};
    std::vector<double> f(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t j = 0; j < k; ++j) f[x] += r.x[j] * cone.generators()[j][x];
        f[x] += r.x[k + x];
    }
    return {infinity, bounded_function(cone.space(), std::move(f))};
}

} // namespace monutil
