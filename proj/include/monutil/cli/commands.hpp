#pragma once

#include "monutil/cli/io.hpp"
#include "monutil/cli/report.hpp"
#include "monutil/func/bump_family.hpp"
#include "monutil/func/envelope.hpp"
#include "monutil/lp/polar.hpp"
#include "monutil/utility/harness.hpp"
#include "monutil/utility/penalty.hpp"
#include "monutil/utility/utility.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <random>
#include <string>

namespace monutil::cli {

struct run_config {
    std::string command;
    std::filesystem::path config;
    std::uint64_t seed = 0;
    std::optional<double> tol;
    std::optional<std::size_t> horizon;
};

inline void validate(const run_config& rc) {
    if (rc.tol && !(*rc.tol > 0.0)) throw config_error("--tol must be positive");
    if (rc.horizon && *rc.horizon < 1) throw config_error("--horizon must be at least 1");
}

inline report start(const run_config& rc) {
    validate(rc);
    report r;
    r.command = rc.command;
    r.seed = rc.seed;
    return r;
}

/// u(f), the minimizing measure and the acceptance decision.
inline report cmd_eval(const run_config& rc) {
    auto r = start(rc);
    const node cfg = load_file(rc.config);
    const auto ls = load_space(child(cfg, "space"), rc.seed);
    const auto u = load_utility(child(cfg, "utility"), ls);
    const auto f = load_function(child(cfg, "function"), ls.space);
    const auto e = u.eval(f);
    const bool verify = get_or(cfg, "verify", false);
    const auto a = acceptance_test(u, f, verify);
    r.data["utility"] = u.name();
    r.data["value"] = number(e.value);
    r.data["minimizer"] = e.minimizer ? measure_json(*e.minimizer) : ordered_json(nullptr);
    r.data["accepted"] = a.accepted;
    if (verify) {
        const double gap = std::abs(*a.recovered - e.value);
        r.data["recovered"] = number(*a.recovered);
        r.add("cash_recovery", gap <= 1e-6, number(gap),
              gap <= 1e-6 ? "" : "max{a : u(f-a) >= 0} = " + format_double(*a.recovered) + " vs u(f) = " + format_double(e.value));
    }
    return r;
}

/// Lower and upper Lipschitz envelopes for each requested n, with sup-norm gaps.
inline report cmd_envelope(const run_config& rc) {
    auto r = start(rc);
    const node cfg = load_file(rc.config);
    const auto ls = load_space(child(cfg, "space"), rc.seed);
    const auto f = load_function(child(cfg, "function"), ls.space);
    auto ns = get<std::vector<double>>(cfg, "n");
    if (ns.empty()) throw config_error("envelope: empty list of n");
    for (double n : ns)
        if (!(n > 0.0)) throw config_error("envelope: n must be positive");
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const auto& m = *ls.space;
    r.primary.columns = {"n", "gap_lower", "gap_upper"};
    auto rows = ordered_json::array();
    bool below = true, above = true, lipschitz = true, monotone = true;
    std::string witness;
    double previous_lower = infinity, previous_upper = infinity;
    for (double n : ns) {
        const auto g = lipschitz_envelope(f, n), h = upper_envelope(f, n);
        below = below && g.dominated_by(f, 0.0);
        above = above && f.dominated_by(h, 0.0);
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y)
                if (std::abs(g[x] - g[y]) > n * m(x, y) + 1e-9) {
                    if (lipschitz) witness = "n=" + format_double(n) + " at " + m.id(x) + "," + m.id(y);
                    lipschitz = false;
                }
        const double gap_lower = (f - g).sup_norm(), gap_upper = (h - f).sup_norm();
        monotone = monotone && gap_lower <= previous_lower && gap_upper <= previous_upper;
        previous_lower = gap_lower;
        previous_upper = gap_upper;
        r.primary.rows.push_back({n, gap_lower, gap_upper});
        ordered_json row;
        row["n"] = n;
        row["lower"] = function_json(g);
        row["upper"] = function_json(h);
        row["gap_lower"] = gap_lower;
        row["gap_upper"] = gap_upper;
        rows.push_back(std::move(row));
    }
    r.data["lipschitz_constant"] = number(lipschitz_constant(f));
    r.data["envelopes"] = std::move(rows);
    r.add("lower_below_f", below);
    r.add("upper_above_f", above);
    r.add("n_lipschitz", lipschitz, nullptr, witness);
    r.add("gaps_nonincreasing", monotone);
    return r;
}

/// Polar scenario set, bipolar round trip on random probes, decisions on
/// listed probes and conjugate penalty values at listed measures.
inline report cmd_duality(const run_config& rc) {
    auto r = start(rc);
    const node cfg = load_file(rc.config);
    const auto ls = load_space(child(cfg, "space"), rc.seed);
    const auto cone = load_cone(cfg, ls.space);
    scenario_set set = [&] {
        try {
            return polar_scenario_set(cone, get_or(cfg, "oracle", false));
        } catch (const capacity_error& e) {
            throw config_error(e.what());
        }
    }();
    r.data["empty"] = set.is_empty();
    if (set.has_vertices()) {
        auto v = ordered_json::array();
        for (const auto& mu : set.vertices()) v.push_back(measure_json(mu));
        r.data["vertices"] = std::move(v);
    }

    const auto count = get_or<std::size_t>(cfg, "probes", 200);
    std::mt19937_64 rng(rc.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::size_t disagreements = 0, accepted = 0;
    std::string witness;
    for (std::size_t p = 0; p < count; ++p) {
        auto f = bounded_function::generate(ls.space, [&](std::size_t) { return unit(rng); });
        const auto d = bipolar_membership(f, set);
        const auto c = conic_membership(f, cone);
        accepted += d.accepted;
        if (d.accepted != c.member) {
            if (disagreements == 0) witness = "probe " + std::to_string(p);
            ++disagreements;
        }
    }
    r.data["round_trip"] = {{"probes", count}, {"accepted", accepted}, {"disagreements", disagreements}};
    r.add("round_trip", disagreements == 0, disagreements, witness);

    if (has(cfg, "probe_functions")) {
        auto decisions = ordered_json::array();
        for (const auto& p : cfg.value.at("probe_functions")) {
            const auto f = load_function({p, cfg.base}, ls.space);
            const auto d = bipolar_membership(f, set);
            ordered_json row;
            row["function"] = function_json(f);
            row["accepted"] = d.accepted;
            row["vacuous"] = d.vacuous;
            row["min_value"] = number(d.min_value);
            row["witness"] = d.witness ? measure_json(*d.witness) : ordered_json(nullptr);
            decisions.push_back(std::move(row));
        }
        r.data["decisions"] = std::move(decisions);
    }
    if (has(cfg, "measures")) {
        auto conj = ordered_json::array();
        for (const auto& m : cfg.value.at("measures")) {
            const auto mu = load_measure({m, cfg.base}, ls.space);
            const auto c = conjugate_penalty(cone, mu);
            ordered_json row;
            row["measure"] = measure_json(mu);
            row["value"] = number(c.value);
            row["ray"] = c.ray ? function_json(*c.ray) : ordered_json(nullptr);
            conj.push_back(std::move(row));
        }
        r.data["conjugate"] = std::move(conj);
    }
    return r;
}

/// u(f_m) along a decreasing sequence against u(lim f_m).
inline report cmd_fatou(const run_config& rc) {
    auto r = start(rc);
    const node cfg = load_file(rc.config);
    const auto ls = load_space(child(cfg, "space"), rc.seed);
    const auto u = load_utility(child(cfg, "utility"), ls);
    std::optional<std::size_t> horizon = rc.horizon;
    if (!horizon && has(cfg, "horizon")) horizon = get<std::size_t>(cfg, "horizon");
    const auto seq = load_sequence(child(cfg, "sequence"), ls, horizon);
    const double tol = rc.tol.value_or(get_or(cfg, "tol", 1e-8));
    if (!(tol > 0.0)) throw config_error("fatou: tolerance must be positive");
    try {
        const auto res = fatou_check(u, seq, tol);
        r.primary.columns = {"m", "u", "gap"};
        for (std::size_t m = 1; m <= res.values.size(); ++m)
            r.primary.rows.push_back({double(m), res.values[m - 1], res.values[m - 1] - res.limit_value});
        r.data["utility"] = u.name();
        r.data["values"] = numbers(res.values);
        r.data["limit_value"] = number(res.limit_value);
        r.data["gap"] = number(res.gap);
        r.data["tolerance"] = tol;
        r.add("fatou", res.passed, number(res.gap),
              res.passed ? "" : "u(f_M) - u(f) = " + format_double(res.gap) + " at M = " + std::to_string(seq.horizon()));
    } catch (const monotonicity_violation& e) {
        r.add("fatou", false, nullptr, e.what());
    }
    return r;
}

/// Support-localization probe over a bump family.
inline report cmd_probe(const run_config& rc) {
    auto r = start(rc);
    const node cfg = load_file(rc.config);
    const auto ls = load_space(child(cfg, "space"), rc.seed);
    const auto u = load_utility(child(cfg, "utility"), ls);
    const auto fam = [&] {
        try {
            return make_bump_family(ls.space, points(*ls.space, cfg.value.at("centers")));
        } catch (const parameter_error& e) {
            throw config_error(e.what());
        }
    }();
    const auto n_max = get_or<std::size_t>(cfg, "N_max", rc.horizon.value_or(fam.size()));
    if (n_max < 1 || n_max > fam.size()) throw config_error("probe: N_max must be in 1..family size");
    const auto res = support_localization_probe(u, fam, n_max);
    r.data["u_zero"] = number(res.u_zero);
    r.primary.columns = {"n", "radius", "u_neg_bump", "coefficient", "u_sum"};
    auto rows = ordered_json::array();
    for (const auto& row : res.rows) {
        r.primary.rows.push_back({double(row.n), row.radius, row.u_neg_bump, row.coefficient, row.u_sum});
        ordered_json j;
        j["n"] = row.n;
        j["center"] = ls.space->id(fam.centers[row.n - 1]);
        j["radius"] = number(row.radius);
        j["u_neg_bump"] = number(row.u_neg_bump);
        j["skipped"] = row.skipped;
        j["coefficient"] = number(row.coefficient);
        j["u_sum"] = number(row.u_sum);
        rows.push_back(std::move(j));
        const std::string name = "bound_N" + std::to_string(row.n);
        if (row.skipped)
            r.skip("bump_" + std::to_string(row.n), "u(-psi_" + std::to_string(row.n) + ") = 0");
        r.add(name, row.bound_holds, number(row.u_sum),
              row.bound_holds ? "" : "u(g_N) = " + format_double(row.u_sum));
    }
    r.data["rows"] = std::move(rows);
    r.data["not_localizable"] = res.not_localizable;
    r.add("normalized", res.u_zero == 0.0, number(res.u_zero));
    return r;
}

} // namespace monutil::cli
