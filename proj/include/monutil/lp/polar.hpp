#pragma once

#include "monutil/core/error.hpp"
#include "monutil/lp/acceptance_cone.hpp"
#include "monutil/lp/double_description.hpp"
#include "monutil/lp/simplex.hpp"
#include "monutil/measure/measure.hpp"
#include "monutil/utility/scenario_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace monutil {

using rational = boost::multiprecision::cpp_rational;

/// Largest point count for which exact vertex enumeration is offered.
inline constexpr std::size_t max_vertex_points = 10;
/// Acceptance threshold on min mu(f) and on the conic shortfall.
inline constexpr double membership_tolerance = 1e-9;

/// Vertices of {mu in the simplex : mu(g) >= 0 for all generators}, exact.
inline std::vector<measure> polar_vertices(const acceptance_cone& cone) {
    const auto& space = cone.space();
    const std::size_t n = space->size();
    if (n > max_vertex_points)
        throw capacity_error("vertex enumeration supports at most " + std::to_string(max_vertex_points) + " points");
    std::vector<std::vector<rational>> halfspaces;
    for (const auto& g : cone.generators()) {
        std::vector<rational> h;
        for (double v : g.values()) h.emplace_back(v);
        halfspaces.push_back(std::move(h));
    }
    std::vector<measure> out;
    for (const auto& ray : lp::cone_extreme_rays<rational>(n, halfspaces)) {
        std::vector<double> w;
        for (const auto& v : ray) w.push_back(v.convert_to<double>());
        out.push_back(measure::from_dense(space, w));
    }
    return out;
}

/// The polar of the cone intersected with the simplex.
///
/// Spaces of at most `max_vertex_points` points get an exact vertex list in
/// addition to the constraint form. Larger spaces need `allow_oracle` and are
/// returned in constraint form only.
inline scenario_set polar_scenario_set(const acceptance_cone& cone, bool allow_oracle = false) {
    if (cone.space()->size() <= max_vertex_points) return scenario_set::from_cone_and_vertices(cone, polar_vertices(cone));
    if (!allow_oracle)
        throw capacity_error("polar_scenario_set: " + std::to_string(cone.space()->size()) +
                             " points exceed the vertex-enumeration limit; request oracle form");
    return scenario_set::from_cone(cone);
}

struct membership_decision {
    bool accepted = false;
    /// The scenario set was empty, so acceptance holds vacuously.
    bool vacuous = false;
    double min_value = 0.0;
    /// A minimizing measure, reported when rejected.
    std::optional<measure> witness;
};

/// f is accepted iff min over S of mu(f) >= -membership_tolerance.
inline membership_decision bipolar_membership(const bounded_function& f, const scenario_set& set) {
    if (set.is_empty()) return {true, true, 0.0, std::nullopt};
    auto m = set.minimize(f);
    membership_decision d{m.value >= -membership_tolerance, false, m.value, std::nullopt};
    if (!d.accepted) d.witness = std::move(m.minimizer);
    return d;
}

struct conic_decision {
    bool member = false;
    /// Smallest constant t >= 0 with f + t in the cone.
    double shortfall = 0.0;
    std::vector<double> multipliers;
};

/// Primal route: is f = sum_j l_j g_j + s with l, s >= 0? Solved as
/// min t s.t. sum_j l_j g_j(x) - t <= f(x) for every x.
inline conic_decision conic_membership(const bounded_function& f, const acceptance_cone& cone) {
    if (f.space() != cone.space()) throw space_mismatch("conic_membership: function on a different space");
    const std::size_t k = cone.generators().size();
    std::vector<double> cost(k + 1, 0.0);
    cost[k] = 1.0;
    lp::linear_program<double> prog(cost);
    for (std::size_t x = 0; x < f.size(); ++x) {
        std::vector<double> row(k + 1);
        for (std::size_t j = 0; j < k; ++j) row[j] = cone.generators()[j][x];
        row[k] = -1.0;
        prog.add(std::move(row), lp::sense::less_equal, f[x]);
    }
    lp::options opt;
    opt.lexicographic = false;
    auto r = lp::solve_min(prog, opt);
    if (r.status != lp::status::optimal) throw error("conic_membership: solver returned " + std::string(lp::to_string(r.status)));
    conic_decision d;
    d.shortfall = r.x[k];
    d.member = d.shortfall <= membership_tolerance;
    d.multipliers.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(k));
    return d;
}

} // namespace monutil
