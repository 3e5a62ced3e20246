#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/space/compactification.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace monutil {

/// Terms f_1 >= f_2 >= ... >= f_M >= limit, materialized up to the horizon M.
///
/// `domain` lists the points where f_m is claimed to converge to `limit`;
/// an empty domain means every point of the space.
struct decreasing_sequence {
    std::vector<bounded_function> terms;
    bounded_function limit;
    std::vector<std::size_t> domain;

    std::size_t horizon() const noexcept { return terms.size(); }

    /// One-based access, f_m for m in 1..horizon.
    const bounded_function& at(std::size_t m) const {
        if (m == 0 || m > terms.size()) throw parameter_error("sequence index out of range");
        return terms[m - 1];
    }

    std::vector<std::size_t> domain_points() const {
        if (!domain.empty()) return domain;
        std::vector<std::size_t> all(limit.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return all;
    }
};

/// Rejects sequences that are not pointwise non-increasing or dip below the limit.
inline decreasing_sequence make_decreasing_sequence(std::vector<bounded_function> terms, bounded_function limit,
                                                    std::vector<std::size_t> domain = {}, double tol = 1e-12) {
    if (terms.empty()) throw parameter_error("decreasing sequence: empty horizon");
    for (std::size_t m = 0; m < terms.size(); ++m) {
        terms[m].require_same_space(limit);
        if (!limit.dominated_by(terms[m], tol))
            throw parameter_error("decreasing sequence: term " + std::to_string(m + 1) + " dips below the limit");
        if (m > 0 && !terms[m].dominated_by(terms[m - 1], tol))
            throw parameter_error("decreasing sequence: term " + std::to_string(m + 1) + " exceeds its predecessor");
    }
    std::sort(domain.begin(), domain.end());
    return {std::move(terms), std::move(limit), std::move(domain)};
}

/// f_m(x) = term(m, x) for m = 1..horizon.
template <class Term>
decreasing_sequence generate_sequence(const bounded_function& limit, std::size_t horizon, Term&& term,
                                      std::vector<std::size_t> domain = {}) {
    std::vector<bounded_function> terms;
    terms.reserve(horizon);
    for (std::size_t m = 1; m <= horizon; ++m)
        terms.push_back(bounded_function::generate(limit.space(), [&](std::size_t i) { return term(m, i); }));
    return make_decreasing_sequence(std::move(terms), limit, std::move(domain));
}

/// f_m = f + k phi^m with phi the bump of the chosen boundary set.
///
/// `f` lives on the ambient space; its boundary values act as the continuous
/// extension. Convergence to f is claimed on the interior only (phi < 1 there).
inline decreasing_sequence boundary_power_sequence(const compactification_pair& pair, const bounded_function& f,
                                                   double k, std::size_t boundary_index, std::size_t max_m) {
    if (boundary_index >= pair.bumps.size())
        throw parameter_error("boundary_power_sequence: boundary index out of range");
    if (!(k > 0.0)) throw parameter_error("boundary_power_sequence: k must be positive");
    if (f.space() != pair.ambient) throw space_mismatch("boundary_power_sequence: f is not on the ambient space");
    if (max_m < 1) throw parameter_error("boundary_power_sequence: horizon must be >= 1");
    const auto& phi = pair.bumps[boundary_index];
    std::vector<double> power(phi.values().begin(), phi.values().end());
    std::vector<bounded_function> terms;
    terms.reserve(max_m);
    for (std::size_t m = 1; m <= max_m; ++m) {
        if (m > 1)
            for (std::size_t i = 0; i < power.size(); ++i) power[i] *= phi[i];
        terms.push_back(bounded_function::generate(f.space(), [&](std::size_t i) { return f[i] + k * power[i]; }));
    }
    return make_decreasing_sequence(std::move(terms), f, pair.interior);
}

/// F(x) = min_n (n+1) f(x) - n g_n(x) over the materialized horizon.
///
/// Requires g_n >= f and, at every point of `domain` (all points when empty),
/// g_n(x) == f(x) from some index on. Points outside the domain keep F = f.
inline bounded_function witness_function(const bounded_function& f, const std::vector<bounded_function>& g,
                                         std::vector<std::size_t> domain = {}) {
    if (g.empty()) throw parameter_error("witness_function: empty sequence");
    if (domain.empty()) {
        domain.resize(f.size());
        std::iota(domain.begin(), domain.end(), std::size_t{0});
    }
    for (const auto& gn : g) {
        gn.require_same_space(f);
        if (!f.dominated_by(gn)) throw parameter_error("witness_function: some g_n lies below f");
    }
    std::vector<double> out(f.values().begin(), f.values().end());
    for (auto x : domain) {
        if (g.back()[x] != f[x]) {
            throw stationarity_error("witness_function: point '" + f.space()->id(x) +
                                     "' not stationary within horizon " + std::to_string(g.size()));
        }
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t n = 1; n <= g.size(); ++n) {
            const double nn = static_cast<double>(n);
            best = std::min(best, (nn + 1.0) * f[x] - nn * g[n - 1][x]);
        }
        out[x] = best;
    }
    return {f.space(), std::move(out)};
}

struct stationary_result {
    std::vector<bounded_function> g;
    /// G_n = {x in domain : g_n(x) > f(x)}, n = 1..horizon.
    std::vector<std::vector<std::size_t>> open_sets;
    /// Per domain point, the first n from which g_n(x) == f(x) holds for good.
    std::vector<std::size_t> stationary_from;
    std::vector<std::size_t> domain;
    bounded_function witness;
};

/// g_n = max(f, f_n - delta), the sets G_n, their nesting, and the witness F.
inline stationary_result stationary_sequence(const decreasing_sequence& seq, double delta) {
    if (!(delta > 0.0)) throw parameter_error("stationary_sequence: delta must be positive");
    const auto& f = seq.limit;
    const auto domain = seq.domain_points();
    stationary_result r{{}, {}, {}, domain, f};
    for (std::size_t n = 1; n <= seq.horizon(); ++n) {
        r.g.push_back(pointwise_max(f, seq.at(n) - delta));
        std::vector<std::size_t> open;
        for (auto x : domain)
            if (r.g.back()[x] > f[x]) open.push_back(x);
        if (n > 1 && !std::includes(r.open_sets.back().begin(), r.open_sets.back().end(), open.begin(), open.end()))
            throw stationarity_error("stationary_sequence: G_" + std::to_string(n) + " is not contained in G_" +
                                     std::to_string(n - 1));
        r.open_sets.push_back(std::move(open));
    }
    for (auto x : domain) {
        std::size_t from = seq.horizon() + 1;
        for (std::size_t n = seq.horizon(); n >= 1 && r.g[n - 1][x] == f[x]; --n) from = n;
        if (from > seq.horizon()) {
            throw stationarity_error("stationary_sequence: point '" + f.space()->id(x) +
                                     "' still in G_n at the horizon " + std::to_string(seq.horizon()));
        }
        r.stationary_from.push_back(from);
    }
    r.witness = witness_function(f, r.g, domain);
    return r;
}

} // namespace monutil
