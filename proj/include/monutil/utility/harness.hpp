#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/func/bump_family.hpp"
#include "monutil/func/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace monutil {

using utility_oracle = std::function<double(const bounded_function&)>;

inline constexpr double axiom_tolerance = 1e-9;

struct axiom_check {
    std::string name;
    bool passed = true;
    std::size_t trials = 0;
    /// Largest violation seen; 0 when every trial passed.
    double worst = 0.0;
    std::string witness;
};

struct axiom_report {
    std::vector<axiom_check> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const axiom_check& c) { return c.passed; });
    }
    const axiom_check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline void record(axiom_check& c, double violation, const std::string& witness) {
    ++c.trials;
    if (violation > axiom_tolerance) {
        if (c.passed || violation > c.worst) c.witness = witness;
        c.passed = false;
        c.worst = std::max(c.worst, violation);
    }
}

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

/// Checks the monetary-utility axioms on probes, each within `axiom_tolerance`:
/// translation, monotonicity, concavity, |u(f)| <= ||f||, u(f - min f) >= 0,
/// and (when `coherent`) positive homogeneity. Failures carry a witness.
inline axiom_report axioms_check(const utility_oracle& u, std::span<const bounded_function> probes,
                                 std::span<const double> scalars, bool coherent) {
    if (probes.empty()) throw parameter_error("axioms_check: no probes");
    auto named = [](const char* name) {
        axiom_check c;
        c.name = name;
        return c;
    };
    auto monetary = named("monetary"), monotone = named("monotone"), concave = named("concave"),
         bounded = named("bounded"), positive = named("nonnegative"), homogeneous = named("homogeneous");
    const std::size_t count = probes.size();
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = u(probes[i]);

    for (std::size_t i = 0; i < count; ++i) {
        const auto& f = probes[i];
        const std::string tag = "probe " + std::to_string(i);
        for (double a : scalars) {
            const double lhs = u(f + a);
            detail::record(monetary, std::abs(lhs - (values[i] + a)),
                           tag + ", a=" + detail::fmt(a) + ": u(f+a)=" + detail::fmt(lhs) +
                               " vs u(f)+a=" + detail::fmt(values[i] + a));
            if (coherent && a > 0.0) {
                const double scaled = u(a * f);
                detail::record(homogeneous, std::abs(scaled - a * values[i]),
                               tag + ", lambda=" + detail::fmt(a) + ": u(lambda f)=" + detail::fmt(scaled) +
                                   " vs lambda u(f)=" + detail::fmt(a * values[i]));
            }
        }
        const auto& g = probes[(i + 1) % count];
        const auto upper = pointwise_max(f, g);
        const double u_upper = u(upper);
        detail::record(monotone, values[i] - u_upper,
                       tag + ": u(f)=" + detail::fmt(values[i]) + " > u(max(f,g))=" + detail::fmt(u_upper));
        const double mid = u(0.5 * f + 0.5 * g);
        const double chord = 0.5 * values[i] + 0.5 * values[(i + 1) % count];
        detail::record(concave, chord - mid,
                       tag + ": u(mid)=" + detail::fmt(mid) + " < chord " + detail::fmt(chord));
        detail::record(bounded, std::abs(values[i]) - f.sup_norm(),
                       tag + ": |u(f)|=" + detail::fmt(std::abs(values[i])) + " > ||f||=" + detail::fmt(f.sup_norm()));
        const double lowest = f.min();
        const auto lifted = f.map([lowest](double v) { return v - lowest; });
        const double u_lifted = u(lifted);
        detail::record(positive, -u_lifted, tag + ": u(f - min f)=" + detail::fmt(u_lifted));
    }
    axiom_report r{{monetary, monotone, concave, bounded, positive}};
    if (coherent) r.checks.push_back(homogeneous);
    return r;
}

struct fatou_result {
    bool passed = false;
    /// u(f_m), m = 1..horizon.
    std::vector<double> values;
    double limit_value = 0.0;
    /// u(f_horizon) - u(limit).
    double gap = 0.0;
};

/// u(f_m) must be non-increasing (within 1e-9); passes iff the gap at the
/// horizon is at most `tol`.
inline fatou_result fatou_check(const utility_oracle& u, const decreasing_sequence& seq, double tol) {
    if (!(tol > 0.0)) throw parameter_error("fatou_check: tolerance must be positive");
    fatou_result r;
    for (std::size_t m = 1; m <= seq.horizon(); ++m) {
        r.values.push_back(u(seq.at(m)));
        if (m > 1 && r.values[m - 1] > r.values[m - 2] + axiom_tolerance) {
            throw monotonicity_violation("fatou_check: u(f_" + std::to_string(m) + ")=" + detail::fmt(r.values[m - 1]) +
                                         " exceeds u(f_" + std::to_string(m - 1) + ")=" + detail::fmt(r.values[m - 2]));
        }
    }
    r.limit_value = u(seq.limit);
    r.gap = r.values.back() - r.limit_value;
    r.passed = r.gap <= tol;
    return r;
}

struct probe_row {
    std::size_t n = 0;
    double radius = 0.0;
    /// u(-psi_n).
    double u_neg_bump = 0.0;
    bool skipped = false;
    /// n / u(-psi_n); NaN when skipped.
    double coefficient = std::numeric_limits<double>::quiet_NaN();
    /// u(g_N) with g_N = sum over active n <= N of a_n psi_n.
    double u_sum = 0.0;
    /// u(g_N) <= -(largest active n <= N) + 1e-9; vacuous when none is active.
    bool bound_holds = true;
};

struct probe_result {
    /// u(g_0) = u(0).
    double u_zero = 0.0;
    std::vector<probe_row> rows;
    /// Every bump active and the bound held for every N: scenario supports
    /// escape every compact set of centers within the family.
    bool not_localizable = false;
};

/// Coefficients a_n = n / u(-psi_n) make u(sum a_n psi_n) <= -n for each
/// active n. Bumps with u(-psi_n) == 0 are skipped and reported.
inline probe_result support_localization_probe(const utility_oracle& u, const bump_family& fam, std::size_t n_max) {
    if (n_max > fam.size()) throw parameter_error("support_localization_probe: N_max exceeds the family size");
    probe_result r;
    r.u_zero = u(bounded_function::constant(fam.space, 0.0));
    std::vector<double> coeffs(n_max, 0.0);
    std::size_t largest_active = 0;
    bool all_active = true, all_bounds = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        probe_row row;
        row.n = n;
        row.radius = fam.radii[n - 1];
        row.u_neg_bump = u(-fam.bumps[n - 1]);
        row.skipped = !(row.u_neg_bump < -axiom_tolerance);
        if (!row.skipped) {
            row.coefficient = static_cast<double>(n) / row.u_neg_bump;
            coeffs[n - 1] = row.coefficient;
            largest_active = n;
        }
        all_active = all_active && !row.skipped;
        row.u_sum = u(bump_sum(fam, coeffs, n));
        if (largest_active > 0) row.bound_holds = row.u_sum <= -static_cast<double>(largest_active) + axiom_tolerance;
        all_bounds = all_bounds && row.bound_holds;
        r.rows.push_back(row);
    }
    r.not_localizable = n_max > 0 && all_active && all_bounds;
    return r;
}

} // namespace monutil
