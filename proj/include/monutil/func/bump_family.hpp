#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/space/metric_space.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace monutil {

/// Bumps psi_n around centers x_n with radii eta_n and pairwise disjoint supports.
struct bump_family {
    space_ref space;
    std::vector<std::size_t> centers;
    std::vector<double> radii;
    std::vector<bounded_function> bumps;
    /// O_n: points strictly within eta_n of x_n.
    std::vector<std::vector<std::size_t>> balls;

    std::size_t size() const noexcept { return centers.size(); }
};

/// Radii: eta_1 = dist(x_1, later)/8, then eta_k = min(eta_{k-1}/2, dist(x_k, later)/4),
/// with the last center taking eta_{k-1}/2. Each psi_n is
/// min(dist(x, O_n^c), dist(x_n, O_n^c)) / dist(x_n, O_n^c).
inline bump_family make_bump_family(space_ref space, std::vector<std::size_t> centers) {
    const auto& m = *space;
    const std::size_t count = centers.size();
    if (count < 2) throw parameter_error("bump_family: need at least two centers");
    for (std::size_t i = 0; i < count; ++i) {
        if (centers[i] >= m.size()) throw parameter_error("bump_family: center out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (centers[i] == centers[j]) throw parameter_error("bump_family: duplicate center '" + m.id(centers[i]) + "'");
    }

    std::vector<double> radii(count);
    for (std::size_t k = 0; k < count; ++k) {
        const bool last = k + 1 == count;
        const double quarter =
            last ? 0.0 : 0.25 * dist_to_set(m, centers[k], std::span(centers).subspan(k + 1));
        if (!last && !(quarter > 0.0)) throw parameter_error("bump_family: center coincides with a later one");
        if (k == 0)
            radii[k] = quarter / 2.0;
        else
            radii[k] = last ? radii[k - 1] / 2.0 : std::min(radii[k - 1] / 2.0, quarter);
    }

    bump_family fam{space, centers, radii, {}, {}};
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<std::size_t> ball, outside;
        for (std::size_t x = 0; x < m.size(); ++x)
            (m(x, centers[k]) < radii[k] ? ball : outside).push_back(x);
        if (outside.empty()) throw parameter_error("bump_family: degenerate ball, no point outside O_" + std::to_string(k + 1));
        const double scale = dist_to_set(m, centers[k], outside);
        fam.bumps.push_back(bounded_function::generate(space, [&](std::size_t x) {
            return std::min(dist_to_set(m, x, outside), scale) / scale;
        }));
        fam.balls.push_back(std::move(ball));
    }
    for (std::size_t x = 0; x < m.size(); ++x) {
        int active = 0;
        for (const auto& psi : fam.bumps) active += psi[x] != 0.0;
        if (active > 1) throw parameter_error("bump_family: overlapping supports at '" + m.id(x) + "'");
    }
    return fam;
}

/// sum_{n <= N} a_n psi_n; at most one term is nonzero at each point.
inline bounded_function bump_sum(const bump_family& fam, std::span<const double> coeffs, std::size_t count) {
    if (count > fam.size()) throw parameter_error("bump_sum: N exceeds the family size");
    if (coeffs.size() < count) throw parameter_error("bump_sum: fewer coefficients than N");
    std::vector<double> out(fam.space->size(), 0.0);
    for (std::size_t n = 0; n < count; ++n) {
        const auto& psi = fam.bumps[n];
        for (std::size_t x = 0; x < out.size(); ++x)
            if (psi[x] != 0.0) out[x] = coeffs[n] * psi[x];
    }
    return {fam.space, std::move(out)};
}

} // namespace monutil
