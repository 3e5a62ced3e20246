#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/measure/measure.hpp"
#include "monutil/space/compactification.hpp"
#include "monutil/utility/penalty.hpp"
#include "monutil/utility/scenario_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace monutil {

/// Absolute tolerance on u(f) >= 0 for acceptance.
inline constexpr double acceptance_tolerance = 1e-9;

struct evaluation {
    double value = 0.0;
    std::optional<measure> minimizer;
};

/// u(f) = min over S of mu(f).
inline evaluation coherent_eval(const scenario_set& set, const bounded_function& f) {
    auto m = set.minimize(f);
    return {m.value, std::move(m.minimizer)};
}

/// u(f) = -gamma ln sum_i nu_i exp(-f_i / gamma); the minimizing measure is
/// proportional to nu_i exp(-f_i / gamma).
inline evaluation entropic_eval(double gamma, const measure& nu, const bounded_function& f) {
    if (!(gamma > 0.0)) throw parameter_error("entropic_eval: gamma must be positive");
    if (nu.space() != f.space()) throw space_mismatch("entropic_eval: reference and function on different spaces");
    double shift = -infinity;
    for (const auto& [i, w] : nu.entries()) shift = std::max(shift, -f[i] / gamma);
    double sum = 0.0;
    std::vector<measure::entry> weights;
    for (const auto& [i, w] : nu.entries()) {
        const double e = w * std::exp(-f[i] / gamma - shift);
        weights.emplace_back(i, e);
        sum += e;
    }
    for (auto& e : weights) e.second /= sum;
    return {-gamma * (std::log(sum) + shift), measure(nu.space(), std::move(weights))};
}

/// u(f) = inf over the effective domain of mu(f) + c(mu).
inline evaluation concave_eval(const penalty& c, const bounded_function& f) {
    return std::visit(
        [&](const auto& k) -> evaluation {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, penalty::indicator_kind>) {
                return coherent_eval(k.set, f);
            } else if constexpr (std::is_same_v<K, penalty::entropic_kind>) {
                return entropic_eval(k.gamma, k.reference, f);
            } else {
                std::size_t best = 0;
                double best_value = infinity;
                for (std::size_t e = 0; e < k.entries.size(); ++e) {
                    const double v = evaluate(k.entries[e].first, f) + k.entries[e].second;
                    if (v < best_value) {
                        best_value = v;
                        best = e;
                    }
                }
                return {best_value, k.entries[best].first};
            }
        },
        c.kind());
}

/// The same infimum applied to arbitrary bounded value arrays (step
/// functions, indicators). On a finite sample it coincides with concave_eval.
inline double borel_extension_eval(const penalty& c, std::span<const double> values) {
    return concave_eval(c, bounded_function(c.space(), std::vector<double>(values.begin(), values.end()))).value;
}

/// u(f) = min_x f(x).
inline double worst_case_eval(const bounded_function& f) { return f.min(); }

/// min over a subset of points.
inline double worst_case_eval(const bounded_function& f, std::span<const std::size_t> domain) {
    if (domain.empty()) return f.min();
    double m = infinity;
    for (auto i : domain) m = std::min(m, f[i]);
    return m;
}

/// Default bound on how much |f(a_j) - f(b)| may grow along the approach tail.
inline constexpr double default_tail_tolerance = 1e-9;

/// The boundary point an interior approach sequence converges to.
///
/// b is the boundary point nearest the last approach point; distances to b
/// must decrease strictly along the whole sequence.
inline std::size_t approach_limit(const compactification_pair& pair, std::span<const std::size_t> approach) {
    if (approach.size() < 2) throw extension_error("approach sequence needs at least two points");
    const auto& m = *pair.ambient;
    for (auto a : approach)
        if (!pair.is_interior(a)) throw extension_error("approach point '" + m.id(a) + "' is not interior");
    const auto boundary = pair.boundary_points();
    if (boundary.empty()) throw extension_error("pair has no boundary");
    std::size_t b = boundary.front();
    for (auto c : boundary)
        if (m(approach.back(), c) < m(approach.back(), b)) b = c;
    for (std::size_t j = 1; j < approach.size(); ++j) {
        if (!(m(approach[j], b) < m(approach[j - 1], b)))
            throw extension_error("approach sequence does not converge to '" + m.id(b) + "'");
    }
    return b;
}

/// Value of the point mass at the boundary limit b of `approach`.
///
/// `f` carries its extension values on the ambient space. Along the tail
/// (second half) of the approach, |f(a_j) - f(b)| must not grow by more than
/// `tail_tol`; otherwise f has no continuous extension to b.
inline double boundary_utility_eval(const compactification_pair& pair, std::span<const std::size_t> approach,
                                    const bounded_function& f, double tail_tol = default_tail_tolerance) {
    if (f.space() != pair.ambient) throw space_mismatch("boundary_utility_eval: f is not on the ambient space");
    const std::size_t b = approach_limit(pair, approach);
    const std::size_t tail = approach.size() / 2;
    double previous = infinity;
    for (std::size_t j = tail; j < approach.size(); ++j) {
        const double dev = std::abs(f[approach[j]] - f[b]);
        if (dev > previous + tail_tol)
            throw extension_error("f oscillates along the approach to '" + pair.ambient->id(b) + "'");
        previous = dev;
    }
    return f[b];
}

/// A monetary utility function of one of the built-in kinds.
class utility {
  public:
    struct coherent_kind {
        scenario_set set;
    };
    struct concave_kind {
        penalty c;
    };
    struct boundary_kind {
        compactification_pair pair;
        std::vector<std::size_t> approach;
        double tail_tolerance = default_tail_tolerance;
    };
    struct worst_case_kind {
        space_ref space;
        std::vector<std::size_t> domain; // empty: every point
    };
    using kind_type = std::variant<coherent_kind, concave_kind, boundary_kind, worst_case_kind>;

    static utility coherent(scenario_set s) { return utility(coherent_kind{std::move(s)}); }
    static utility concave(penalty c) { return utility(concave_kind{std::move(c)}); }
    static utility entropic(double gamma, measure reference) {
        return concave(penalty::entropic(gamma, std::move(reference)));
    }
    static utility boundary(compactification_pair pair, std::vector<std::size_t> approach,
                            double tail_tol = default_tail_tolerance) {
        approach_limit(pair, approach);
        return utility(boundary_kind{std::move(pair), std::move(approach), tail_tol});
    }
    static utility worst_case(space_ref space, std::vector<std::size_t> domain = {}) {
        std::sort(domain.begin(), domain.end());
        return utility(worst_case_kind{std::move(space), std::move(domain)});
    }

    const kind_type& kind() const noexcept { return kind_; }

    const space_ref& space() const {
        return std::visit(
            [](const auto& k) -> const space_ref& {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, coherent_kind>)
                    return k.set.space();
                else if constexpr (std::is_same_v<K, concave_kind>)
                    return k.c.space();
                else if constexpr (std::is_same_v<K, boundary_kind>)
                    return k.pair.ambient;
                else
                    return k.space;
            },
            kind_);
    }

    /// Positively homogeneous kinds: scenario sets, indicator penalties,
    /// boundary point masses, worst case.
    bool is_coherent() const {
        if (auto* c = std::get_if<concave_kind>(&kind_))
            return std::holds_alternative<penalty::indicator_kind>(c->c.kind());
        return true;
    }

    std::string name() const {
        return std::visit(
            [](const auto& k) -> std::string {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, coherent_kind>)
                    return "coherent";
                else if constexpr (std::is_same_v<K, concave_kind>)
                    return std::visit(
                        [](const auto& p) -> std::string {
                            using P = std::decay_t<decltype(p)>;
                            if constexpr (std::is_same_v<P, penalty::indicator_kind>)
                                return "indicator";
                            else if constexpr (std::is_same_v<P, penalty::entropic_kind>)
                                return "entropic";
                            else
                                return "tabulated";
                        },
                        k.c.kind());
                else if constexpr (std::is_same_v<K, boundary_kind>)
                    return "boundary";
                else
                    return "worst_case";
            },
            kind_);
    }

    evaluation eval(const bounded_function& f) const {
        if (f.space() != space()) throw space_mismatch("utility: function on a different space");
        return std::visit(
            [&](const auto& k) -> evaluation {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, coherent_kind>) {
                    return coherent_eval(k.set, f);
                } else if constexpr (std::is_same_v<K, concave_kind>) {
                    return concave_eval(k.c, f);
                } else if constexpr (std::is_same_v<K, boundary_kind>) {
                    const double v = boundary_utility_eval(k.pair, k.approach, f, k.tail_tolerance);
                    return {v, measure::dirac(k.pair.ambient, approach_limit(k.pair, k.approach))};
                } else {
                    const auto& d = k.domain;
                    std::size_t best = d.empty() ? 0 : d.front();
                    auto consider = [&](std::size_t i) {
                        if (f[i] < f[best]) best = i;
                    };
                    if (d.empty())
                        for (std::size_t i = 0; i < f.size(); ++i) consider(i);
                    else
                        for (auto i : d) consider(i);
                    return {f[best], measure::dirac(k.space, best)};
                }
            },
            kind_);
    }

    double operator()(const bounded_function& f) const { return eval(f).value; }

  private:
    explicit utility(kind_type k) : kind_(std::move(k)) {}
    kind_type kind_;
};

struct acceptance_result {
    bool accepted = false;
    double value = 0.0;
    /// max{a : u(f - a) >= 0} by bisection, when requested.
    std::optional<double> recovered;
};

/// f is acceptable iff u(f) >= -acceptance_tolerance.
template <class Oracle>
acceptance_result acceptance_test(const Oracle& u, const bounded_function& f, bool verify = false) {
    acceptance_result r;
    r.value = u(f);
    r.accepted = r.value >= -acceptance_tolerance;
    if (verify) {
        double lo = -f.sup_norm() - 1.0, hi = f.sup_norm() + 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
            const double mid = 0.5 * (lo + hi);
            (u(f - mid) >= 0.0 ? lo : hi) = mid;
        }
        r.recovered = 0.5 * (lo + hi);
    }
    return r;
}

} // namespace monutil
