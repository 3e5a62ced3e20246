#pragma once

#include "monutil/core/error.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace monutil::lp {

/// Extreme rays of the pointed cone {x in R^n : x >= 0, H x >= 0}.
///
/// Double description: start from the orthant's rays e_1..e_n and intersect
/// with one half-space at a time. Adjacency uses the combinatorial test on
/// tight-constraint sets, which is exact for exact scalars. Rays are scaled
/// to unit coordinate sum and returned sorted lexicographically.
template <class Scalar>
std::vector<std::vector<Scalar>> cone_extreme_rays(std::size_t n, const std::vector<std::vector<Scalar>>& halfspaces) {
    struct ray {
        std::vector<Scalar> x;
        std::vector<char> tight; // per processed constraint (orthant first)
    };
    for (const auto& h : halfspaces)
        if (h.size() != n) throw structural_error("cone_extreme_rays: halfspace width mismatch");

    std::vector<ray> rays;
    for (std::size_t i = 0; i < n; ++i) {
        ray r{std::vector<Scalar>(n, Scalar(0)), std::vector<char>(n, 1)};
        r.x[i] = Scalar(1);
        r.tight[i] = 0;
        rays.push_back(std::move(r));
    }

    for (const auto& h : halfspaces) {
        std::vector<Scalar> value(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            Scalar v(0);
            for (std::size_t i = 0; i < n; ++i) v += h[i] * rays[r].x[i];
            value[r] = v;
        }
        std::vector<ray> next;
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] > Scalar(0))
                pos.push_back(r);
            else if (value[r] < Scalar(0))
                neg.push_back(r);
        }
        auto adjacent = [&](std::size_t a, std::size_t b) {
            const auto& ta = rays[a].tight;
            const auto& tb = rays[b].tight;
            for (std::size_t c = 0; c < rays.size(); ++c) {
                if (c == a || c == b) continue;
                const auto& tc = rays[c].tight;
                bool contains = true;
                for (std::size_t k = 0; k < ta.size() && contains; ++k)
                    if (ta[k] && tb[k] && !tc[k]) contains = false;
                if (contains) return false;
            }
            return true;
        };
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (value[r] < Scalar(0)) continue;
            ray kept = rays[r];
            kept.tight.push_back(value[r] == Scalar(0));
            next.push_back(std::move(kept));
        }
        for (auto p : pos) {
            for (auto q : neg) {
                if (!adjacent(p, q)) continue;
                ray combined{std::vector<Scalar>(n), {}};
                Scalar sum(0);
                for (std::size_t i = 0; i < n; ++i) {
                    combined.x[i] = value[p] * rays[q].x[i] - value[q] * rays[p].x[i];
                    sum += combined.x[i];
                }
                for (auto& v : combined.x) v /= sum;
                combined.tight.resize(rays[p].tight.size());
                for (std::size_t k = 0; k < combined.tight.size(); ++k)
                    combined.tight[k] = rays[p].tight[k] && rays[q].tight[k];
                combined.tight.push_back(1);
                next.push_back(std::move(combined));
            }
        }
        rays = std::move(next);
    }

    std::vector<std::vector<Scalar>> out;
    out.reserve(rays.size());
    for (auto& r : rays) {
        Scalar sum(0);
        for (const auto& v : r.x) sum += v;
        for (auto& v : r.x) v /= sum;
        out.push_back(std::move(r.x));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace monutil::lp
