#pragma once

#include "monutil/core/error.hpp"
#include "monutil/space/metric_space.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace monutil {

/// Size of the jitter used to separate duplicated paths.
inline constexpr double path_dedup_jitter = 1e-9;

/// max_t |p(t) - q(t)| over a shared time grid.
inline double sup_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw structural_error("sup_distance: paths of different length");
    double d = 0.0;
    for (std::size_t t = 0; t < p.size(); ++t) d = std::max(d, std::abs(p[t] - q[t]));
    return d;
}

/// Space of trajectories under the sup metric. Exact duplicates are separated
/// by a seeded jitter of size `path_dedup_jitter` so that distinct points have
/// positive distance.
inline space_ref make_path_space(std::vector<std::vector<double>> paths, std::uint64_t seed = 0) {
    const std::size_t n = paths.size();
    if (n == 0) throw parameter_error("make_path_space: no paths");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unit(0.5, 1.0);
    for (std::size_t i = 1; i < n; ++i) {
        bool duplicate = true;
        while (duplicate) {
            duplicate = false;
            for (std::size_t j = 0; j < i && !duplicate; ++j) {
                if (paths[i].size() != paths[j].size())
                    throw structural_error("make_path_space: paths of different length");
                duplicate = sup_distance(paths[i], paths[j]) == 0.0;
            }
            if (duplicate)
                for (auto& v : paths[i]) v += path_dedup_jitter * unit(rng);
        }
    }
    std::vector<double> dist(n * n);
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = "path" + std::to_string(i);
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = i == j ? 0.0 : sup_distance(paths[i], paths[j]);
    }
    return make_metric_space(std::move(ids), std::move(dist), std::move(paths));
}

/// Gaussian random walks from 0 with `n_steps` unit-variance increments.
/// Each point carries its trajectory (n_steps + 1 values) as labels.
inline space_ref sample_paths(std::size_t n_paths, std::size_t n_steps, std::uint64_t seed) {
    if (n_paths < 1) throw parameter_error("sample_paths: n_paths must be >= 1");
    if (n_steps < 1) throw parameter_error("sample_paths: n_steps must be >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> step(0.0, 1.0);
    std::vector<std::vector<double>> paths(n_paths, std::vector<double>(n_steps + 1, 0.0));
    for (auto& p : paths)
        for (std::size_t t = 1; t <= n_steps; ++t) p[t] = p[t - 1] + step(rng);
    return make_path_space(std::move(paths), seed);
}

} // namespace monutil
