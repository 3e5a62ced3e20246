#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace monutil {

/// Lower Lipschitz envelope g(x) = min_y f(y) + n d(x, y) over all points.
///
/// Generic in the scalar so the same code runs on exact rationals. `dist(i, j)`
/// must return a Scalar. The result is the largest n-Lipschitz minorant of f.
template <class Scalar, class Dist>
std::vector<Scalar> lipschitz_envelope_values(std::span<const Scalar> f, Dist&& dist, const Scalar& n) {
    if (!(n > Scalar(0))) throw parameter_error("lipschitz_envelope: n must be positive");
    std::vector<Scalar> g(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        Scalar best = f[x];
        for (std::size_t y = 0; y < f.size(); ++y) {
            if (y == x) continue;
            Scalar candidate = f[y] + n * dist(x, y);
            if (candidate < best) best = candidate;
        }
        g[x] = best;
    }
    return g;
}

/// h = -lower(-f): the smallest n-Lipschitz majorant of f.
template <class Scalar, class Dist>
std::vector<Scalar> upper_envelope_values(std::span<const Scalar> f, Dist&& dist, const Scalar& n) {
    std::vector<Scalar> neg(f.begin(), f.end());
    for (auto& v : neg) v = -v;
    auto h = lipschitz_envelope_values<Scalar>(std::span<const Scalar>(neg), dist, n);
    for (auto& v : h) v = -v;
    return h;
}

inline bounded_function lipschitz_envelope(const bounded_function& f, double n) {
    const auto& m = *f.space();
    auto g = lipschitz_envelope_values<double>(f.values(), [&m](std::size_t i, std::size_t j) { return m(i, j); },
                                               n);
    return {f.space(), std::move(g)};
}

inline bounded_function upper_envelope(const bounded_function& f, double n) {
    const auto& m = *f.space();
    auto h = upper_envelope_values<double>(f.values(), [&m](std::size_t i, std::size_t j) { return m(i, j); }, n);
    return {f.space(), std::move(h)};
}

} // namespace monutil
