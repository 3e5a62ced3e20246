#pragma once

#include "monutil/func/bounded_function.hpp"
#include "monutil/measure/measure.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace monutil::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* version = "0.1.0";

enum class check_status { pass, fail, skipped };

inline const char* to_string(check_status s) {
    switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::skipped: return "skipped";
    }
    return "?";
}

/// Non-finite values are written as the strings "inf", "-inf" and "nan".
inline ordered_json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

inline ordered_json numbers(std::span<const double> v) {
    auto out = ordered_json::array();
    for (double x : v) out.push_back(number(x));
    return out;
}

inline ordered_json function_json(const bounded_function& f) { return numbers(f.values()); }

inline ordered_json measure_json(const measure& mu) {
    ordered_json out = ordered_json::object();
    for (const auto& [i, w] : mu.entries()) out[mu.space()->id(i)] = number(w);
    return out;
}

struct check_record {
    std::string name;
    check_status status = check_status::pass;
    ordered_json value;
    std::string witness;
};

/// A table written as CSV with --format csv.
struct table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<check_record> checks;
    ordered_json data = ordered_json::object();
    table primary;

    void add(std::string name, bool passed, ordered_json value = nullptr, std::string witness = {}) {
        checks.push_back({std::move(name), passed ? check_status::pass : check_status::fail, std::move(value),
                          std::move(witness)});
    }
    void skip(std::string name, std::string reason) {
        checks.push_back({std::move(name), check_status::skipped, nullptr, std::move(reason)});
    }

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == check_status::fail) return false;
        return true;
    }

    ordered_json to_json() const {
        ordered_json out;
        out["command"] = command;
        out["version"] = version;
        out["seed"] = seed;
        auto list = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json r;
            r["name"] = c.name;
            r["status"] = to_string(c.status);
            r["value"] = c.value;
            r["witness"] = c.witness;
            list.push_back(std::move(r));
        }
        out["checks"] = std::move(list);
        out["passed"] = passed();
        out["data"] = data;
        return out;
    }
};

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// The primary table when the command has one, otherwise the check list.
inline void write_csv(std::ostream& out, const report& r) {
    if (!r.primary.columns.empty()) {
        for (std::size_t c = 0; c < r.primary.columns.size(); ++c) out << (c ? "," : "") << r.primary.columns[c];
        out << '\n';
        for (const auto& row : r.primary.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
            out << '\n';
        }
        return;
    }
    out << "name,status,witness\n";
    for (const auto& c : r.checks) {
        std::string w = c.witness;
        for (auto& ch : w)
            if (ch == ',' || ch == '\n') ch = ';';
        out << c.name << ',' << to_string(c.status) << ',' << w << '\n';
    }
}

/// Indented JSON; doubles use the shortest representation that round-trips exactly.
inline void write_json(std::ostream& out, const report& r) { out << r.to_json().dump(2) << '\n'; }

} // namespace monutil::cli
