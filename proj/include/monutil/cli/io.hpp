#pragma once

#include "monutil/core/error.hpp"
#include "monutil/func/bounded_function.hpp"
#include "monutil/func/sequence.hpp"
#include "monutil/lp/acceptance_cone.hpp"
#include "monutil/lp/polar.hpp"
#include "monutil/measure/measure.hpp"
#include "monutil/space/compactification.hpp"
#include "monutil/space/metric_space.hpp"
#include "monutil/space/path_space.hpp"
#include "monutil/utility/penalty.hpp"
#include "monutil/utility/utility.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace monutil::cli {

using json = nlohmann::json;

/// Malformed or unresolvable input; maps to exit code 2.
class config_error : public error {
  public:
    using error::error;
};

/// A JSON document together with the directory its relative references resolve against.
struct node {
    json value;
    std::filesystem::path base;
};

inline json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw config_error("'" + path.string() + "': " + e.what());
    }
}

inline node load_file(const std::filesystem::path& path) {
    return {read_json(path), path.has_parent_path() ? path.parent_path() : std::filesystem::path(".")};
}

/// Strings are file references relative to the referring document.
inline node resolve(const node& n) {
    if (n.value.is_string()) return load_file(n.base / n.value.get<std::string>());
    return n;
}

inline node child(const node& n, const char* key) {
    if (!n.value.is_object() || !n.value.contains(key)) throw config_error(std::string("missing field '") + key + "'");
    return resolve({n.value.at(key), n.base});
}

inline bool has(const node& n, const char* key) { return n.value.is_object() && n.value.contains(key); }

template <class T>
T get(const node& n, const char* key) {
    if (!has(n, key)) throw config_error(std::string("missing field '") + key + "'");
    try {
        return n.value.at(key).get<T>();
    } catch (const json::exception& e) {
        throw config_error(std::string("field '") + key + "': " + e.what());
    }
}

template <class T>
T get_or(const node& n, const char* key, T fallback) {
    return has(n, key) ? get<T>(n, key) : fallback;
}

inline std::size_t point(const metric_space& m, const json& id) {
    if (id.is_number_unsigned()) {
        const auto i = id.get<std::size_t>();
        if (i >= m.size()) throw config_error("point index " + std::to_string(i) + " out of range");
        return i;
    }
    if (!id.is_string()) throw config_error("points are referenced by id or index");
    auto i = m.find(id.get<std::string>());
    if (!i) throw config_error("unknown point '" + id.get<std::string>() + "'");
    return *i;
}

inline std::vector<std::size_t> points(const metric_space& m, const json& ids) {
    if (!ids.is_array()) throw config_error("expected a list of points");
    std::vector<std::size_t> out;
    for (const auto& id : ids) out.push_back(point(m, id));
    return out;
}

/// A metric space, optionally carrying interior and boundary sets.
struct loaded_space {
    space_ref space;
    std::optional<compactification_pair> pair;
};

inline loaded_space load_space(const node& ref, std::uint64_t seed) {
    const node n = resolve(ref);
    try {
        space_ref space;
        if (has(n, "generator")) {
            const auto kind = get<std::string>(n, "generator");
            if (kind == "interval") {
                auto pair = sample_interval(get<std::size_t>(n, "n"), get_or(n, "include_boundary", true),
                                            get_or(n, "bump_scale", 1.0));
                space = pair.ambient;
                if (!pair.boundary_sets.empty()) return {space, std::move(pair)};
                return {space, std::nullopt};
            }
            if (kind == "line") {
                const auto coords = get<std::vector<double>>(n, "coords");
                std::vector<std::string> ids;
                if (has(n, "ids")) {
                    ids = get<std::vector<std::string>>(n, "ids");
                } else {
                    for (std::size_t i = 0; i < coords.size(); ++i) ids.push_back("p" + std::to_string(i));
                }
                space = make_line_space(std::move(ids), coords);
            } else if (kind == "paths") {
                space = sample_paths(get<std::size_t>(n, "n_paths"), get<std::size_t>(n, "n_steps"),
                                     get_or<std::uint64_t>(n, "seed", seed));
            } else {
                throw config_error("unknown space generator '" + kind + "'");
            }
        } else {
            const auto ids = get<std::vector<std::string>>(n, "points");
            const auto dist = get<std::vector<std::vector<double>>>(n, "dist");
            auto labels = get_or(n, "labels", std::vector<std::vector<double>>{});
            space = make_metric_space(ids, flatten_square(dist), std::move(labels));
        }
        if (!has(n, "boundary_sets")) return {space, std::nullopt};
        std::vector<std::vector<std::size_t>> boundary;
        for (const auto& set : n.value.at("boundary_sets")) boundary.push_back(points(*space, set));
        std::vector<std::size_t> interior;
        if (has(n, "interior")) {
            interior = points(*space, n.value.at("interior"));
        } else {
            std::vector<bool> on_boundary(space->size(), false);
            for (const auto& s : boundary)
                for (auto i : s) on_boundary[i] = true;
            for (std::size_t i = 0; i < space->size(); ++i)
                if (!on_boundary[i]) interior.push_back(i);
        }
        auto pair = make_compactification_pair(space, std::move(interior), std::move(boundary),
                                               get_or(n, "bump_scale", 1.0));
        return {space, std::move(pair)};
    } catch (const config_error&) {
        throw;
    } catch (const error& e) {
        throw config_error(std::string("space: ") + e.what());
    }
}

/// A list of values by index, {"values": [...]}, or {"by_id": {id: value}} (missing ids are 0).
inline bounded_function load_function(const node& ref, const space_ref& space) {
    const node n = resolve(ref);
    try {
        if (n.value.is_array()) return {space, n.value.get<std::vector<double>>()};
        if (has(n, "values")) return {space, get<std::vector<double>>(n, "values")};
        if (has(n, "by_id")) {
            std::vector<double> v(space->size(), 0.0);
            for (const auto& [id, x] : n.value.at("by_id").items()) v[point(*space, json(id))] = x.get<double>();
            return {space, std::move(v)};
        }
        if (has(n, "label_power")) {
            if (!space->has_labels()) throw config_error("label_power needs a space with coordinates");
            const double p = get<double>(n, "label_power");
            return bounded_function::generate(space, [&](std::size_t i) { return std::pow(space->label(i)[0], p); });
        }
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error(std::string("function: ") + e.what());
    }
    throw config_error("function: expected a value list, 'values', 'by_id' or 'label_power'");
}

/// "uniform", {"dirac": id}, {"weights": {id: w}}, or a dense weight list.
inline measure load_measure(const node& ref, const space_ref& space) {
    if (ref.value == "uniform") return measure::uniform(space);
    const node n = resolve(ref);
    try {
        if (n.value.is_array()) return measure::from_dense(space, n.value.get<std::vector<double>>());
        if (has(n, "dirac")) return measure::dirac(space, point(*space, n.value.at("dirac")));
        if (has(n, "weights")) {
            std::vector<measure::entry> w;
            for (const auto& [id, x] : n.value.at("weights").items()) w.emplace_back(point(*space, json(id)), x.get<double>());
            return {space, std::move(w)};
        }
    } catch (const config_error&) {
        throw;
    } catch (const std::exception& e) {
        throw config_error(std::string("measure: ") + e.what());
    }
    throw config_error("measure: expected 'uniform', 'dirac', 'weights' or a weight list");
}

inline acceptance_cone load_cone(const node& n, const space_ref& space) {
    std::vector<bounded_function> gens;
    if (has(n, "generators"))
        for (const auto& g : n.value.at("generators")) gens.push_back(load_function({g, n.base}, space));
    try {
        return acceptance_cone(space, std::move(gens));
    } catch (const error& e) {
        throw config_error(std::string("cone: ") + e.what());
    }
}

/// A utility specification; `kind` is one of coherent, indicator_cone,
/// entropic, tabulated, boundary, worst_case.
inline utility load_utility(const node& ref, const loaded_space& ls) {
    const node n = resolve(ref);
    const auto kind = get<std::string>(n, "kind");
    const auto& space = ls.space;
    if (kind == "coherent") {
        std::vector<measure> scenarios;
        for (const auto& s : n.value.at("scenarios")) scenarios.push_back(load_measure({s, n.base}, space));
        return utility::coherent(scenario_set::from_vertices(space, std::move(scenarios)));
    }
    if (kind == "indicator_cone") {
        auto cone = load_cone(n, space);
        return utility::concave(penalty::indicator(polar_scenario_set(cone, get_or(n, "oracle", false))));
    }
    if (kind == "entropic") {
        const auto reference = has(n, "reference") ? load_measure({n.value.at("reference"), n.base}, space) : measure::uniform(space);
        try {
            return utility::entropic(get<double>(n, "gamma"), reference);
        } catch (const parameter_error& e) {
            throw config_error(e.what());
        }
    }
    if (kind == "tabulated") {
        std::vector<std::pair<measure, double>> entries;
        for (const auto& e : n.value.at("entries")) {
            const node en{e, n.base};
            entries.emplace_back(load_measure({en.value.at("measure"), en.base}, space), get<double>(en, "penalty"));
        }
        try {
            return utility::concave(penalty::tabulated(std::move(entries)));
        } catch (const error& e) {
            throw config_error(e.what());
        }
    }
    if (kind == "boundary") {
        if (!ls.pair) throw config_error("boundary utility needs a space with boundary_sets");
        double tail = default_tail_tolerance;
        if (has(n, "extension")) tail = get_or(child(n, "extension"), "tail_tolerance", tail);
        try {
            return utility::boundary(*ls.pair, points(*space, n.value.at("approach")), tail);
        } catch (const extension_error& e) {
            throw config_error(e.what());
        }
    }
    if (kind == "worst_case") {
        return utility::worst_case(space, has(n, "domain") ? points(*space, n.value.at("domain")) : std::vector<std::size_t>{});
    }
    throw config_error("unknown utility kind '" + kind + "'");
}

/// {"kind": "boundary_power", "f", "k", "M_max", "boundary_index"} or
/// {"kind": "explicit", "terms": [...], "limit"}.
inline decreasing_sequence load_sequence(const node& ref, const loaded_space& ls, std::optional<std::size_t> horizon) {
    const node n = resolve(ref);
    const auto kind = get<std::string>(n, "kind");
    try {
        if (kind == "boundary_power") {
            if (!ls.pair) throw config_error("boundary_power sequence needs a space with boundary_sets");
            const auto f = load_function(child(n, "f"), ls.space);
            return boundary_power_sequence(*ls.pair, f, get<double>(n, "k"), get_or<std::size_t>(n, "boundary_index", 0),
                                           horizon.value_or(get_or<std::size_t>(n, "M_max", 30)));
        }
        if (kind == "explicit") {
            std::vector<bounded_function> terms;
            for (const auto& t : n.value.at("terms")) terms.push_back(load_function({t, n.base}, ls.space));
            return make_decreasing_sequence(std::move(terms), load_function(child(n, "limit"), ls.space));
        }
    } catch (const config_error&) {
        throw;
    } catch (const parameter_error& e) {
        throw config_error(std::string("sequence: ") + e.what());
    }
    throw config_error("unknown sequence kind '" + kind + "'");
}

} // namespace monutil::cli
