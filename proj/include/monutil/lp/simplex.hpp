#pragma once

#include "monutil/core/error.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace monutil::lp {

/// Tolerances per scalar type. Exact scalars (rationals) use zero everywhere.
template <class Scalar>
struct tolerance {
    static Scalar pivot() { return Scalar(0); }
    static Scalar feasibility() { return Scalar(0); }
    static Scalar optimality() { return Scalar(0); }
};

template <>
struct tolerance<double> {
    static double pivot() { return 1e-11; }
    static double feasibility() { return 1e-9; }
    static double optimality() { return 1e-11; }
};

enum class sense { less_equal, greater_equal, equal };

/// minimize c.x subject to row_i . x (<=, >=, =) rhs_i and x >= lower.
template <class Scalar>
struct linear_program {
    std::vector<Scalar> objective;
    std::vector<std::vector<Scalar>> rows;
    std::vector<sense> senses;
    std::vector<Scalar> rhs;
    /// Per-variable lower bound; empty means all zero.
    std::vector<Scalar> lower;

    explicit linear_program(std::vector<Scalar> c = {}) : objective(std::move(c)) {}

    std::size_t variables() const noexcept { return objective.size(); }
    std::size_t constraints() const noexcept { return rows.size(); }

    linear_program& add(std::vector<Scalar> row, sense s, Scalar b) {
        rows.push_back(std::move(row));
        senses.push_back(s);
        rhs.push_back(std::move(b));
        return *this;
    }
};

enum class status { optimal, infeasible, unbounded };

inline const char* to_string(status s) {
    switch (s) {
    case status::optimal: return "optimal";
    case status::infeasible: return "infeasible";
    case status::unbounded: return "unbounded";
    }
    return "?";
}

template <class Scalar>
struct result {
    lp::status status = lp::status::infeasible;
    Scalar value{};
    std::vector<Scalar> x;
    /// Optimal: multipliers y with c - A^T y >= 0 on free directions.
    /// Infeasible: a Farkas certificate from phase one.
    std::vector<Scalar> dual;
    /// Unbounded: a feasible direction along which the objective decreases.
    std::vector<Scalar> ray;
    std::size_t iterations = 0;
};

struct options {
    /// Among optimal vertices, report the lexicographically smallest x.
    bool lexicographic = true;
    std::size_t max_iterations = 100000;
};

namespace detail {

template <class Scalar>
class tableau {
  public:
    tableau(const linear_program<Scalar>& lp) : n_(lp.variables()), m_(lp.constraints()) {
        if (lp.senses.size() != m_ || lp.rhs.size() != m_)
            throw structural_error("linear program: constraint arrays differ in length");
        if (!lp.lower.empty() && lp.lower.size() != n_)
            throw structural_error("linear program: lower bound count mismatch");
        for (const auto& r : lp.rows)
            if (r.size() != n_) throw structural_error("linear program: row width does not match objective");

        std::size_t slacks = 0;
        for (auto s : lp.senses) slacks += s != sense::equal;
        art_begin_ = n_ + slacks;
        cols_ = art_begin_ + m_;
        width_ = cols_ + 1;
        cells_.assign(m_ * width_, Scalar(0));
        sign_.assign(m_, 1);
        basis_.resize(m_);

        std::size_t slack = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            Scalar b = lp.rhs[i];
            for (std::size_t j = 0; j < n_; ++j) {
                at(i, j) = lp.rows[i][j];
                if (!lp.lower.empty()) b -= lp.rows[i][j] * lp.lower[j];
            }
            if (lp.senses[i] != sense::equal) at(i, slack++) = lp.senses[i] == sense::less_equal ? Scalar(1) : Scalar(-1);
            if (b < Scalar(0)) {
                sign_[i] = -1;
                for (std::size_t k = 0; k < art_begin_; ++k) at(i, k) = -at(i, k);
                b = -b;
            }
            at(i, art_begin_ + i) = Scalar(1);
            at(i, cols_) = b;
            basis_[i] = art_begin_ + i;
        }
        reduced_.assign(cols_, Scalar(0));
        allowed_.assign(cols_, 1);
    }

    Scalar& at(std::size_t i, std::size_t k) { return cells_[i * width_ + k]; }
    const Scalar& at(std::size_t i, std::size_t k) const { return cells_[i * width_ + k]; }

    std::size_t structural() const noexcept { return n_; }
    std::size_t rows() const noexcept { return m_; }
    bool is_artificial(std::size_t k) const noexcept { return k >= art_begin_; }

    void set_cost(std::vector<Scalar> cost) {
        cost_ = std::move(cost);
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar z = cost_[k];
            for (std::size_t i = 0; i < m_; ++i) z -= cost_[basis_[i]] * at(i, k);
            reduced_[k] = z;
        }
    }

    Scalar objective() const {
        Scalar v(0);
        for (std::size_t i = 0; i < m_; ++i) v += cost_[basis_[i]] * at(i, cols_);
        return v;
    }

    void bar_artificials() {
        for (std::size_t k = art_begin_; k < cols_; ++k) allowed_[k] = 0;
    }

    /// Restricts to the optimal face of the current objective.
    void freeze_positive_reduced_costs() {
        const Scalar tol = tolerance<Scalar>::optimality();
        for (std::size_t k = 0; k < cols_; ++k)
            if (reduced_[k] > tol) allowed_[k] = 0;
    }

    enum class outcome { optimal, unbounded };

    /// Primal simplex with Bland's rule. On unbounded, `entering()` names the ray column.
    outcome run(std::size_t& iterations, std::size_t max_iterations) {
        const Scalar opt_tol = tolerance<Scalar>::optimality();
        const Scalar piv_tol = tolerance<Scalar>::pivot();
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t k = 0; k < cols_; ++k) {
                if (allowed_[k] && reduced_[k] < -opt_tol) {
                    enter = k;
                    break;
                }
            }
            if (enter == cols_) return outcome::optimal;
            std::size_t leave = m_;
            Scalar best_ratio(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (!(at(i, enter) > piv_tol)) continue;
                Scalar ratio = at(i, cols_) / at(i, enter);
                if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) {
                entering_ = enter;
                return outcome::unbounded;
            }
            pivot(leave, enter);
            if (++iterations > max_iterations) throw error("simplex: iteration limit reached");
        }
    }

    void pivot(std::size_t r, std::size_t k) {
        const Scalar p = at(r, k);
        for (std::size_t c = 0; c < width_; ++c) at(r, c) /= p;
        at(r, k) = Scalar(1);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Scalar f = at(i, k);
            if (f == Scalar(0)) continue;
            for (std::size_t c = 0; c < width_; ++c) at(i, c) -= f * at(r, c);
            at(i, k) = Scalar(0);
        }
        const Scalar f = reduced_[k];
        if (f != Scalar(0)) {
            for (std::size_t c = 0; c < cols_; ++c) reduced_[c] -= f * at(r, c);
            reduced_[k] = Scalar(0);
        }
        basis_[r] = k;
    }

    /// Pivots zero-level artificials out of the basis where a real column allows it.
    void drive_out_artificials() {
        const Scalar piv_tol = tolerance<Scalar>::pivot();
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (std::size_t k = 0; k < art_begin_; ++k) {
                const Scalar v = at(i, k);
                if (v > piv_tol || v < -piv_tol) {
                    pivot(i, k);
                    break;
                }
            }
        }
    }

    /// y_i in the original row orientation, read from artificial reduced costs.
    std::vector<Scalar> duals(bool phase_one) const {
        std::vector<Scalar> y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Scalar yi = phase_one ? Scalar(1) - reduced_[art_begin_ + i] : -reduced_[art_begin_ + i];
            y[i] = sign_[i] < 0 ? -yi : yi;
        }
        return y;
    }

    std::vector<Scalar> point() const {
        std::vector<Scalar> x(n_, Scalar(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = at(i, cols_);
        return x;
    }

    std::vector<Scalar> ray() const {
        std::vector<Scalar> d(n_, Scalar(0));
        if (entering_ < n_) d[entering_] = Scalar(1);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) d[basis_[i]] = -at(i, entering_);
        return d;
    }

    std::vector<Scalar> phase_one_cost() const {
        std::vector<Scalar> c(cols_, Scalar(0));
        for (std::size_t k = art_begin_; k < cols_; ++k) c[k] = Scalar(1);
        return c;
    }

    std::vector<Scalar> structural_cost(const std::vector<Scalar>& c) const {
        std::vector<Scalar> full(cols_, Scalar(0));
        for (std::size_t j = 0; j < n_; ++j) full[j] = c[j];
        return full;
    }

    std::vector<Scalar> unit_cost(std::size_t j) const {
        std::vector<Scalar> full(cols_, Scalar(0));
        full[j] = Scalar(1);
        return full;
    }

  private:
    std::size_t n_, m_, art_begin_ = 0, cols_ = 0, width_ = 0, entering_ = 0;
    std::vector<Scalar> cells_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    std::vector<Scalar> cost_;
    std::vector<Scalar> reduced_;
    std::vector<char> allowed_;
};

} // namespace detail

/// Two-phase dense primal simplex with Bland's anti-cycling rule.
///
/// Deterministic: identical inputs give identical vertices. With
/// `options::lexicographic`, the reported optimizer is the lexicographically
/// smallest point of the optimal face.
template <class Scalar>
result<Scalar> solve_min(const linear_program<Scalar>& lp, const options& opt = {}) {
    detail::tableau<Scalar> t(lp);
    result<Scalar> r;

    t.set_cost(t.phase_one_cost());
    t.run(r.iterations, opt.max_iterations);
    if (t.objective() > tolerance<Scalar>::feasibility()) {
        r.status = status::infeasible;
        r.dual = t.duals(true);
        return r;
    }
    t.drive_out_artificials();
    t.bar_artificials();

    t.set_cost(t.structural_cost(lp.objective));
    if (t.run(r.iterations, opt.max_iterations) == decltype(t)::outcome::unbounded) {
        r.status = status::unbounded;
        r.ray = t.ray();
        r.x = t.point();
        return r;
    }
    r.status = status::optimal;
    r.dual = t.duals(false);

    if (opt.lexicographic) {
        for (std::size_t j = 0; j < t.structural(); ++j) {
            t.freeze_positive_reduced_costs();
            t.set_cost(t.unit_cost(j));
            t.run(r.iterations, opt.max_iterations);
        }
    }
    r.x = t.point();
    r.value = Scalar(0);
    for (std::size_t j = 0; j < lp.variables(); ++j) {
        if (!lp.lower.empty()) r.x[j] += lp.lower[j];
        r.value += lp.objective[j] * r.x[j];
    }
    return r;
}

} // namespace monutil::lp
