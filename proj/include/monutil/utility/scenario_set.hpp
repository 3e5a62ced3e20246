#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/lp/acceptance_cone.hpp"
#include "monutil/lp/simplex.hpp"
#include "monutil/measure/measure.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace monutil {

/// A convex set of probability measures on one space, held either as the
/// convex hull of listed vertices, as the polytope cut out of the simplex by
/// an acceptance cone's generators, or both.
class scenario_set {
  public:
    struct minimum {
        double value;
        measure minimizer;
    };

    static scenario_set from_vertices(space_ref space, std::vector<measure> vertices) {
        for (const auto& v : vertices)
            if (v.space() != space) throw space_mismatch("scenario_set: vertex on a different space");
        std::sort(vertices.begin(), vertices.end(),
                  [](const measure& a, const measure& b) { return a.dense() < b.dense(); });
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        scenario_set s(std::move(space));
        s.vertices_ = std::move(vertices);
        return s;
    }

    /// {mu in the simplex : mu(g) >= 0 for every generator g}.
    static scenario_set from_cone(acceptance_cone cone) {
        scenario_set s(cone.space());
        s.cone_ = std::move(cone);
        return s;
    }

    static scenario_set from_cone_and_vertices(acceptance_cone cone, std::vector<measure> vertices) {
        auto s = from_vertices(cone.space(), std::move(vertices));
        s.cone_ = std::move(cone);
        return s;
    }

    /// Every probability measure on the space; vertices are the point masses.
    static scenario_set full_simplex(const space_ref& space) {
        std::vector<measure> v;
        for (std::size_t i = 0; i < space->size(); ++i) v.push_back(measure::dirac(space, i));
        return from_vertices(space, std::move(v));
    }

    const space_ref& space() const noexcept { return space_; }
    bool has_vertices() const noexcept { return vertices_.has_value(); }
    std::span<const measure> vertices() const {
        if (!vertices_) throw error("scenario_set: no vertex representation");
        return *vertices_;
    }
    const acceptance_cone* constraints() const noexcept { return cone_ ? &*cone_ : nullptr; }

    bool is_empty() const {
        if (vertices_) return vertices_->empty();
        return polytope_min(bounded_function::constant(space_, 0.0)) == std::nullopt;
    }

    /// min over the set of mu(f), with an attaining measure.
    minimum minimize(const bounded_function& f) const {
        if (f.space() != space_) throw space_mismatch("scenario_set: function on a different space");
        if (vertices_) {
            if (vertices_->empty()) throw undefined_utility("scenario_set: empty set");
            std::size_t best = 0;
            double best_value = evaluate((*vertices_)[0], f);
            for (std::size_t k = 1; k < vertices_->size(); ++k) {
                const double v = evaluate((*vertices_)[k], f);
                if (v < best_value) {
                    best_value = v;
                    best = k;
                }
            }
            return {best_value, (*vertices_)[best]};
        }
        auto m = polytope_min(f);
        if (!m) throw undefined_utility("scenario_set: empty set");
        return *m;
    }

    bool contains(const measure& mu, double tol = 1e-9) const {
        if (mu.space() != space_) throw space_mismatch("scenario_set: measure on a different space");
        if (cone_) {
            for (const auto& g : cone_->generators())
                if (evaluate(mu, g) < -tol) return false;
            return true;
        }
        return in_hull(mu, *vertices_, tol);
    }

    /// Whether mu is an extreme point of the set.
    bool is_extreme(const measure& mu, double tol = 1e-9) const {
        if (!contains(mu, tol)) return false;
        if (vertices_) {
            std::vector<measure> others;
            bool listed = false;
            for (const auto& v : *vertices_) {
                if (max_abs_diff(v, mu) <= tol)
                    listed = true;
                else
                    others.push_back(v);
            }
            return listed && !in_hull(mu, others, tol);
        }
        // Tight constraints of the polytope at mu must have full rank.
        const std::size_t n = space_->size();
        const auto w = mu.dense();
        std::vector<std::vector<double>> tight;
        tight.emplace_back(n, 1.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] <= tol) {
                std::vector<double> e(n, 0.0);
                e[i] = 1.0;
                tight.push_back(std::move(e));
            }
        }
        for (const auto& g : cone_->generators()) {
            if (std::abs(evaluate(mu, g)) <= tol) tight.emplace_back(g.values().begin(), g.values().end());
        }
        return rank(std::move(tight), tol) == n;
    }

  private:
    explicit scenario_set(space_ref space) : space_(std::move(space)) {}

    std::optional<minimum> polytope_min(const bounded_function& f) const {
        const std::size_t n = space_->size();
        lp::linear_program<double> prog(std::vector<double>(f.values().begin(), f.values().end()));
        prog.add(std::vector<double>(n, 1.0), lp::sense::equal, 1.0);
        for (const auto& g : cone_->generators())
            prog.add(std::vector<double>(g.values().begin(), g.values().end()), lp::sense::greater_equal, 0.0);
        auto r = lp::solve_min(prog);
        if (r.status != lp::status::optimal) return std::nullopt;
        for (auto& v : r.x) v = std::max(v, 0.0);
        auto mu = measure::from_dense(space_, r.x);
        return minimum{evaluate(mu, f), std::move(mu)};
    }

    static double max_abs_diff(const measure& a, const measure& b) {
        const auto da = a.dense(), db = b.dense();
        double d = 0.0;
        for (std::size_t i = 0; i < da.size(); ++i) d = std::max(d, std::abs(da[i] - db[i]));
        return d;
    }

    bool in_hull(const measure& mu, std::span<const measure> points, double tol) const {
        if (points.empty()) return false;
        const std::size_t n = space_->size(), k = points.size();
        // Feasibility of mu = sum_k l_k v_k, sum l = 1, l >= 0 with slack t on each coordinate.
        std::vector<double> cost(k + 1, 0.0);
        cost[k] = 1.0;
        lp::linear_program<double> prog(cost);
        const auto target = mu.dense();
        std::vector<std::vector<double>> dense;
        for (const auto& p : points) dense.push_back(p.dense());
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> up(k + 1), down(k + 1);
            for (std::size_t j = 0; j < k; ++j) up[j] = down[j] = dense[j][i];
            up[k] = -1.0;
            down[k] = 1.0;
            prog.add(up, lp::sense::less_equal, target[i]);
            prog.add(down, lp::sense::greater_equal, target[i]);
        }
        std::vector<double> ones(k + 1, 1.0);
        ones[k] = 0.0;
        prog.add(ones, lp::sense::equal, 1.0);
        lp::options opt;
        opt.lexicographic = false;
        auto r = lp::solve_min(prog, opt);
        return r.status == lp::status::optimal && r.value <= tol;
    }

    static std::size_t rank(std::vector<std::vector<double>> rows, double tol) {
        if (rows.empty()) return 0;
        const std::size_t cols = rows.front().size();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
            std::size_t piv = r;
            for (std::size_t i = r; i < rows.size(); ++i)
                if (std::abs(rows[i][c]) > std::abs(rows[piv][c])) piv = i;
            if (std::abs(rows[piv][c]) <= tol) continue;
            std::swap(rows[piv], rows[r]);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r) continue;
                const double f = rows[i][c] / rows[r][c];
                for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
            }
            ++r;
        }
        return r;
    }

    space_ref space_;
    std::optional<std::vector<measure>> vertices_;
    std::optional<acceptance_cone> cone_;
};

} // namespace monutil
