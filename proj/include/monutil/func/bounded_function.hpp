#pragma once

#include "monutil/core/error.hpp"
#include "monutil/space/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace monutil {

/// Real values on the points of a space, with a cached sup-norm.
class bounded_function {
  public:
    bounded_function(space_ref space, std::vector<double> values)
        : space_(std::move(space)), values_(std::move(values)) {
        if (!space_) throw parameter_error("bounded_function: null space");
        if (values_.size() != space_->size()) {
            throw structural_error("bounded_function: " + std::to_string(values_.size()) +
                                   " values for a space of " + std::to_string(space_->size()) + " points");
        }
        for (double v : values_) {
            if (!std::isfinite(v)) throw parameter_error("bounded_function: non-finite value");
            sup_norm_ = std::max(sup_norm_, std::abs(v));
        }
    }

    static bounded_function constant(space_ref space, double a) {
        const auto n = space->size();
        return {std::move(space), std::vector<double>(n, a)};
    }

    /// Builds values pointwise from a callable of the point index.
    template <class Fn>
    static bounded_function generate(space_ref space, Fn&& fn) {
        std::vector<double> v(space->size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(i);
        return {std::move(space), std::move(v)};
    }

    const space_ref& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    double sup_norm() const noexcept { return sup_norm_; }
    double min() const { return *std::min_element(values_.begin(), values_.end()); }
    double max() const { return *std::max_element(values_.begin(), values_.end()); }

    bool same_space(const bounded_function& o) const noexcept { return space_ == o.space_; }

    /// f <= g pointwise, with slack `tol`.
    bool dominated_by(const bounded_function& g, double tol = 0.0) const {
        require_same_space(g);
        for (std::size_t i = 0; i < size(); ++i)
            if (values_[i] > g.values_[i] + tol) return false;
        return true;
    }

    bool nonnegative(double tol = 0.0) const {
        return std::all_of(values_.begin(), values_.end(), [tol](double v) { return v >= -tol; });
    }

    bool operator==(const bounded_function& o) const { return same_space(o) && values_ == o.values_; }

    void require_same_space(const bounded_function& o) const {
        if (!same_space(o)) throw space_mismatch("functions live on different spaces");
    }

    template <class Op>
    bounded_function zip(const bounded_function& o, Op op) const {
        require_same_space(o);
        std::vector<double> v(size());
        for (std::size_t i = 0; i < size(); ++i) v[i] = op(values_[i], o.values_[i]);
        return {space_, std::move(v)};
    }

    template <class Op>
    bounded_function map(Op op) const {
        std::vector<double> v(size());
        for (std::size_t i = 0; i < size(); ++i) v[i] = op(values_[i]);
        return {space_, std::move(v)};
    }

    friend bounded_function operator+(const bounded_function& f, const bounded_function& g) {
        return f.zip(g, std::plus<>{});
    }
    friend bounded_function operator-(const bounded_function& f, const bounded_function& g) {
        return f.zip(g, std::minus<>{});
    }
    friend bounded_function operator+(const bounded_function& f, double a) {
        return f.map([a](double v) { return v + a; });
    }
    friend bounded_function operator-(const bounded_function& f, double a) {
        return f.map([a](double v) { return v - a; });
    }
    friend bounded_function operator*(double s, const bounded_function& f) {
        return f.map([s](double v) { return s * v; });
    }
    friend bounded_function operator-(const bounded_function& f) {
        return f.map([](double v) { return -v; });
    }

  private:
    space_ref space_;
    std::vector<double> values_;
    double sup_norm_ = 0.0;
};

inline bounded_function pointwise_max(const bounded_function& f, const bounded_function& g) {
    return f.zip(g, [](double a, double b) { return std::max(a, b); });
}

inline bounded_function pointwise_min(const bounded_function& f, const bounded_function& g) {
    return f.zip(g, [](double a, double b) { return std::min(a, b); });
}

/// max over x != y of |f(x) - f(y)| / d(x, y).
inline double lipschitz_constant(const bounded_function& f) {
    const auto& m = *f.space();
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            best = std::max(best, std::abs(f[i] - f[j]) / m(i, j));
    return best;
}

} // namespace monutil
