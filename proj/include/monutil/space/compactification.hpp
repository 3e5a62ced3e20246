#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/space/metric_space.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace monutil {

/// Gap applied to interior bump values when rounding lets one of them reach 1.
inline constexpr double default_bump_gap = 1e-6;

/// A finite ambient space K with a designated interior X and boundary sets M_n
/// partitioning K \ X. Each M_n carries a bump phi_n with phi_n == 1 exactly on M_n.
struct compactification_pair {
    space_ref ambient;
    std::vector<std::size_t> interior;
    std::vector<std::vector<std::size_t>> boundary_sets;
    std::vector<bounded_function> bumps;

    bool is_interior(std::size_t i) const {
        return std::binary_search(interior.begin(), interior.end(), i);
    }

    /// Every point of K \ X, in index order.
    std::vector<std::size_t> boundary_points() const {
        std::vector<std::size_t> out;
        for (const auto& s : boundary_sets) out.insert(out.end(), s.begin(), s.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// phi(x) = max(1 - dist(x, M_n) / scale, 0), with phi < 1 forced off M_n.
inline bounded_function build_boundary_bump(const metric_space& ambient, const space_ref& ref,
                                            std::span<const std::size_t> boundary_set, double scale,
                                            double gap = default_bump_gap) {
    if (!(scale > 0.0)) throw parameter_error("build_boundary_bump: scale must be positive");
    if (boundary_set.empty()) throw parameter_error("build_boundary_bump: empty boundary set");
    std::vector<double> phi(ambient.size());
    std::vector<char> on_set(ambient.size(), 0);
    for (auto b : boundary_set) on_set.at(b) = 1;
    double off_max = 0.0;
    for (std::size_t x = 0; x < ambient.size(); ++x) {
        phi[x] = on_set[x] ? 1.0 : std::max(1.0 - dist_to_set(ambient, x, boundary_set) / scale, 0.0);
        if (!on_set[x]) off_max = std::max(off_max, phi[x]);
    }
    if (off_max >= 1.0) {
        for (std::size_t x = 0; x < ambient.size(); ++x)
            if (!on_set[x]) phi[x] /= (1.0 + gap);
    }
    return {ref, std::move(phi)};
}

inline bounded_function build_boundary_bump(const compactification_pair& pair, std::size_t boundary_index,
                                            double scale = 1.0, double gap = default_bump_gap) {
    if (boundary_index >= pair.boundary_sets.size())
        throw parameter_error("build_boundary_bump: boundary index out of range");
    return build_boundary_bump(*pair.ambient, pair.ambient, pair.boundary_sets[boundary_index], scale, gap);
}

/// Pointwise max of the bumps of every boundary set.
inline bounded_function combined_boundary_bump(const compactification_pair& pair, double scale = 1.0) {
    if (pair.boundary_sets.empty()) throw parameter_error("combined_boundary_bump: no boundary sets");
    auto phi = build_boundary_bump(pair, 0, scale);
    for (std::size_t n = 1; n < pair.boundary_sets.size(); ++n)
        phi = pointwise_max(phi, build_boundary_bump(pair, n, scale));
    return phi;
}

struct pair_violation {
    std::string what;
    std::size_t boundary_index = 0;
    std::size_t point = 0;
};

/// Checks the bump invariants: 0 <= phi_n <= 1, phi_n == 1 exactly on M_n.
inline std::vector<pair_violation> validate_pair(const compactification_pair& pair) {
    std::vector<pair_violation> out;
    if (pair.interior.empty()) out.push_back({"empty interior", 0, 0});
    for (std::size_t n = 0; n < pair.bumps.size(); ++n) {
        const auto& phi = pair.bumps[n];
        const auto& set = pair.boundary_sets[n];
        for (std::size_t x = 0; x < phi.size(); ++x) {
            const bool on = std::find(set.begin(), set.end(), x) != set.end();
            if (phi[x] < 0.0 || phi[x] > 1.0) out.push_back({"bump outside [0,1]", n, x});
            if (on && phi[x] != 1.0) out.push_back({"bump below 1 on its boundary set", n, x});
            if (!on && phi[x] >= 1.0) out.push_back({"bump reaches 1 off its boundary set", n, x});
        }
    }
    return out;
}

/// Validates the partition K = X u M_1 u ... and builds one bump per boundary set.
inline compactification_pair make_compactification_pair(space_ref ambient, std::vector<std::size_t> interior,
                                                         std::vector<std::vector<std::size_t>> boundary_sets,
                                                         double scale = 1.0) {
    const std::size_t n = ambient->size();
    if (interior.empty()) throw parameter_error("compactification pair: empty interior");
    std::vector<int> owner(n, -2); // -2 unassigned, -1 interior, k boundary set k
    auto claim = [&](std::size_t i, int who) {
        if (i >= n) throw parameter_error("compactification pair: point index out of range");
        if (owner[i] != -2) {
            throw parameter_error("compactification pair: point '" + ambient->id(i) +
                                  "' assigned twice");
        }
        owner[i] = who;
    };
    for (auto i : interior) claim(i, -1);
    for (std::size_t k = 0; k < boundary_sets.size(); ++k) {
        if (boundary_sets[k].empty()) throw parameter_error("compactification pair: empty boundary set");
        for (auto i : boundary_sets[k]) claim(i, static_cast<int>(k));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[i] == -2) {
            throw parameter_error("compactification pair: point '" + ambient->id(i) +
                                  "' is neither interior nor boundary");
        }
    }
    std::sort(interior.begin(), interior.end());
    for (auto& s : boundary_sets) std::sort(s.begin(), s.end());

    compactification_pair pair{std::move(ambient), std::move(interior), std::move(boundary_sets), {}};
    for (std::size_t k = 0; k < pair.boundary_sets.size(); ++k)
        pair.bumps.push_back(build_boundary_bump(pair, k, scale));
    return pair;
}

/// Uniform grid i/(n+1), i = 1..n, modelling X = (0,1) inside K = [0,1].
///
/// Point ids are "x1".."xn" for the interior and "b0", "b1" for the
/// endpoints. Points are ordered by coordinate.
inline compactification_pair sample_interval(std::size_t n_interior, bool include_boundary = true,
                                             double scale = 1.0) {
    if (n_interior < 2) throw parameter_error("sample_interval: need at least 2 interior points");
    std::vector<std::string> ids;
    std::vector<double> coords;
    if (include_boundary) {
        ids.push_back("b0");
        coords.push_back(0.0);
    }
    for (std::size_t i = 1; i <= n_interior; ++i) {
        ids.push_back("x" + std::to_string(i));
        coords.push_back(static_cast<double>(i) / static_cast<double>(n_interior + 1));
    }
    if (include_boundary) {
        ids.push_back("b1");
        coords.push_back(1.0);
    }
    auto space = make_line_space(std::move(ids), coords);
    const std::size_t first = include_boundary ? 1 : 0;
    std::vector<std::size_t> interior(n_interior);
    std::iota(interior.begin(), interior.end(), first);
    std::vector<std::vector<std::size_t>> boundary;
    if (include_boundary) boundary = {{0}, {n_interior + 1}};
    return make_compactification_pair(std::move(space), std::move(interior), std::move(boundary), scale);
}

} // namespace monutil
