#pragma once

#include "monutil/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace monutil {

/// Absolute tolerance for the metric axioms.
inline constexpr double metric_tolerance = 1e-12;

/// A finite set of labelled points with a distance matrix.
///
/// The matrix is stored as given; `validate_metric` reports which axioms it
/// violates. Use `make_metric_space` when a validated space is required.
class metric_space {
  public:
    metric_space(std::vector<std::string> ids, std::vector<double> dist,
                 std::vector<std::vector<double>> labels = {})
        : ids_(std::move(ids)), dist_(std::move(dist)), labels_(std::move(labels)) {
        const std::size_t n = ids_.size();
        if (dist_.size() != n * n) {
            throw structural_error("distance matrix has " + std::to_string(dist_.size()) +
                                   " entries, expected " + std::to_string(n * n));
        }
        if (!labels_.empty() && labels_.size() != n) {
            throw structural_error("label count does not match point count");
        }
        index_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!index_.emplace(ids_[i], i).second) {
                throw structural_error("duplicate point id '" + ids_[i] + "'");
            }
        }
    }

    std::size_t size() const noexcept { return ids_.size(); }
    const std::string& id(std::size_t i) const { return ids_.at(i); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }

    double operator()(std::size_t i, std::size_t j) const noexcept {
        return dist_[i * ids_.size() + j];
    }

    std::span<const double> row(std::size_t i) const noexcept {
        return {dist_.data() + i * ids_.size(), ids_.size()};
    }

    std::optional<std::size_t> find(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const std::string& id) const {
        auto found = find(id);
        if (!found) throw parameter_error("unknown point id '" + id + "'");
        return *found;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    std::span<const double> label(std::size_t i) const {
        if (labels_.empty()) return {};
        return labels_.at(i);
    }

  private:
    std::vector<std::string> ids_;
    std::vector<double> dist_;
    std::vector<std::vector<double>> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using space_ref = std::shared_ptr<const metric_space>;

enum class metric_axiom { finite, diagonal, positivity, symmetry, triangle };

inline const char* to_string(metric_axiom a) {
    switch (a) {
    case metric_axiom::finite: return "finite";
    case metric_axiom::diagonal: return "diagonal";
    case metric_axiom::positivity: return "positivity";
    case metric_axiom::symmetry: return "symmetry";
    case metric_axiom::triangle: return "triangle";
    }
    return "?";
}

struct metric_violation {
    metric_axiom axiom;
    std::vector<std::size_t> witness; // offending pair or triple
    double excess = 0.0;
};

/// Empty iff every metric axiom holds within `metric_tolerance`.
struct metric_report {
    std::vector<metric_violation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline metric_report validate_flat(std::span<const double> d, std::size_t n) {
    metric_report report;
    auto at = [&](std::size_t i, std::size_t j) { return d[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(at(i, j))) {
                report.violations.push_back({metric_axiom::finite, {i, j}, 0.0});
            }
        }
    }
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, i) != 0.0) report.violations.push_back({metric_axiom::diagonal, {i, i}, at(i, i)});
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = at(i, j), b = at(j, i);
            if (std::abs(a - b) > metric_tolerance) {
                report.violations.push_back({metric_axiom::symmetry, {i, j}, std::abs(a - b)});
            }
            if (a <= 0.0 || b <= 0.0) {
                report.violations.push_back({metric_axiom::positivity, {i, j}, std::min(a, b)});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                const double excess = at(i, k) - (at(i, j) + at(j, k));
                if (excess > metric_tolerance) {
                    report.violations.push_back({metric_axiom::triangle, {i, j, k}, excess});
                }
            }
        }
    }
    return report;
}

} // namespace detail

inline metric_report validate_metric(const metric_space& m) {
    std::vector<double> flat;
    flat.reserve(m.size() * m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto r = m.row(i);
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return detail::validate_flat(flat, m.size());
}

/// Raw nested-matrix overload; throws `structural_error` if not square.
inline metric_report validate_metric(const std::vector<std::vector<double>>& dist) {
    const std::size_t n = dist.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : dist) {
        if (row.size() != n) throw structural_error("distance matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return detail::validate_flat(flat, n);
}

inline std::vector<double> flatten_square(const std::vector<std::vector<double>>& dist) {
    const std::size_t n = dist.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto& row : dist) {
        if (row.size() != n) throw structural_error("distance matrix is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

/// Builds a space and rejects it unless every metric axiom holds.
inline space_ref make_metric_space(std::vector<std::string> ids, std::vector<double> dist,
                                   std::vector<std::vector<double>> labels = {}) {
    auto m = std::make_shared<const metric_space>(std::move(ids), std::move(dist), std::move(labels));
    auto report = validate_metric(*m);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        std::string where;
        for (auto i : v.witness) where += (where.empty() ? "" : ",") + m->id(i);
        throw structural_error(std::string("metric axiom violated: ") + to_string(v.axiom) + " at (" +
                               where + ")");
    }
    return m;
}

/// Points on the real line with dist = |a - b|.
inline space_ref make_line_space(std::vector<std::string> ids, std::span<const double> coords) {
    const std::size_t n = coords.size();
    if (ids.size() != n) throw structural_error("id count does not match coordinate count");
    std::vector<double> dist(n * n);
    std::vector<std::vector<double>> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = {coords[i]};
        for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = std::abs(coords[i] - coords[j]);
    }
    return make_metric_space(std::move(ids), std::move(dist), std::move(labels));
}

/// min over s in `subset` of dist(x, s).
inline double dist_to_set(const metric_space& m, std::size_t x, std::span<const std::size_t> subset) {
    if (subset.empty()) throw parameter_error("dist_to_set: empty target set");
    double best = std::numeric_limits<double>::infinity();
    for (auto s : subset) best = std::min(best, m(x, s));
    return best;
}

} // namespace monutil
