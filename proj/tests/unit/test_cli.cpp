#include "monutil/cli/commands.hpp"
#include "monutil/cli/io.hpp"
#include "monutil/cli/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace monutil;
using namespace monutil::cli;

namespace {

const std::string data_dir = MONUTIL_DATA_DIR;

run_config config(const std::string& command, const std::string& file) {
    run_config rc;
    rc.command = command;
    rc.config = data_dir + "/" + file;
    rc.seed = 7;
    return rc;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + MONUTIL_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const check_record* find(const report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

} // namespace

TEST(CliIo, LoadsSpacesAndReferences) {
    const auto ls = load_space({json("two_points.json"), data_dir}, 0);
    EXPECT_EQ(ls.space->size(), 2u);
    EXPECT_FALSE(ls.pair.has_value());
    const auto interval = load_space({json("interval99.json"), data_dir}, 0);
    EXPECT_EQ(interval.space->size(), 101u);
    ASSERT_TRUE(interval.pair.has_value());
    EXPECT_EQ(interval.pair->boundary_sets.size(), 2u);

    const auto f = load_function({json{{"by_id", {{"x1", 4.0}}}}, data_dir}, ls.space);
    EXPECT_EQ(f.values()[0], 0.0);
    EXPECT_EQ(f.values()[1], 4.0);
    const auto mu = load_measure({json{{"weights", {{"x0", 0.25}, {"x1", 0.75}}}}, data_dir}, ls.space);
    EXPECT_EQ(mu.weight(1), 0.75);
    EXPECT_EQ(load_measure({json("uniform"), data_dir}, ls.space).weight(0), 0.5);
}

TEST(CliIo, ExplicitBoundarySets) {
    const json spec = {{"points", {"a", "b", "c"}},
                       {"dist", {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}},
                       {"boundary_sets", {{"c"}}}};
    const auto ls = load_space({spec, data_dir}, 0);
    ASSERT_TRUE(ls.pair.has_value());
    EXPECT_EQ(ls.pair->interior, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(ls.pair->bumps.front()[2], 1.0);
}

TEST(CliIo, Rejections) {
    const auto ls = load_space({json("two_points.json"), data_dir}, 0);
    EXPECT_THROW(load_space({json("nope.json"), data_dir}, 0), config_error);
    EXPECT_THROW(load_space({json{{"generator", "sphere"}}, data_dir}, 0), config_error);
    EXPECT_THROW(load_space({json{{"points", {"a", "b"}}, {"dist", {{0, 1}, {2, 0}}}}, data_dir}, 0), config_error);
    EXPECT_THROW(load_function({json{1, 2, 3}, data_dir}, ls.space), config_error);
    EXPECT_THROW(load_function({json{{"by_id", {{"zz", 1}}}}, data_dir}, ls.space), config_error);
    EXPECT_THROW(load_measure({json{{"weights", {{"x0", 0.5}}}}, data_dir}, ls.space), config_error);
    EXPECT_THROW(load_utility({json{{"kind", "mystery"}}, data_dir}, ls), config_error);
    EXPECT_THROW(load_utility({json{{"kind", "entropic"}, {"gamma", -1}}, data_dir}, ls), config_error);
    EXPECT_THROW(load_utility({json{{"kind", "boundary"}, {"approach", {"x0", "x1"}}}, data_dir}, ls), config_error);
}

TEST(CliCommands, EvalCoherent) {
    const auto r = cmd_eval(config("eval", "eval_coherent.json"));
    EXPECT_EQ(r.data["value"], 2.0);
    EXPECT_EQ(r.data["minimizer"]["x0"], 1.0);
    EXPECT_EQ(r.data["accepted"], true);
    EXPECT_TRUE(r.passed());
}

TEST(CliCommands, EvalEntropic) {
    const auto r = cmd_eval(config("eval", "eval_entropic.json"));
    EXPECT_NEAR(r.data["value"].get<double>(), 0.56622, 1e-5);
    EXPECT_EQ(r.data["utility"], "entropic");
}

TEST(CliCommands, EvalMissingFile) {
    EXPECT_THROW(cmd_eval(config("eval", "eval_missing.json")), config_error);
    EXPECT_THROW(cmd_eval(config("eval", "absent.json")), config_error);
}

TEST(CliCommands, Envelope) {
    const auto r = cmd_envelope(config("envelope", "envelope_three.json"));
    ASSERT_EQ(r.primary.rows.size(), 2u);
    EXPECT_EQ(r.primary.rows[0][1], 2.0);
    EXPECT_EQ(r.primary.rows[1][1], 0.0);
    EXPECT_TRUE(r.passed());
    const auto c = cmd_envelope(config("envelope", "envelope_constant.json"));
    for (const auto& row : c.primary.rows) {
        EXPECT_EQ(row[1], 0.0);
        EXPECT_EQ(row[2], 0.0);
    }
    EXPECT_EQ(find(c, "gaps_nonincreasing")->status, check_status::pass);
}

TEST(CliCommands, Duality) {
    const auto r = cmd_duality(config("duality", "duality_half.json"));
    EXPECT_TRUE(r.passed());
    const auto& v = r.data["vertices"];
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0]["x0"], 0.5);
    EXPECT_EQ(v[1]["x0"], 1.0);
    const auto& d = r.data["decisions"];
    EXPECT_EQ(d[0]["accepted"], false);
    EXPECT_EQ(d[0]["witness"]["x0"], 1.0);
    EXPECT_EQ(d[1]["accepted"], true);
    const auto& c = r.data["conjugate"];
    EXPECT_EQ(c[0]["value"], 0.0);
    EXPECT_EQ(c[1]["value"], "inf");
    EXPECT_EQ(c[2]["value"], 0.0);

    const auto full = cmd_duality(config("duality", "duality_nonnegative.json"));
    EXPECT_EQ(full.data["vertices"].size(), 3u);
    EXPECT_THROW(cmd_duality(config("duality", "duality_large.json")), config_error);
}

TEST(CliCommands, Fatou) {
    const auto in = cmd_fatou(config("fatou", "fatou_interior.json"));
    EXPECT_TRUE(in.passed());
    EXPECT_LE(in.data["gap"].get<double>(), 2.0 * std::pow(0.5, 30) + 1e-15);
    const auto out = cmd_fatou(config("fatou", "fatou_boundary.json"));
    EXPECT_FALSE(out.passed());
    EXPECT_EQ(out.data["gap"], 3.0);
    EXPECT_TRUE(cmd_fatou(config("fatou", "fatou_constant.json")).passed());

    auto rc = config("fatou", "fatou_interior.json");
    rc.horizon = 5;
    EXPECT_EQ(cmd_fatou(rc).primary.rows.size(), 5u);
    rc.tol = -1.0;
    EXPECT_THROW(cmd_fatou(rc), config_error);
}

TEST(CliCommands, Probe) {
    const auto r = cmd_probe(config("probe", "probe_line.json"));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.data["not_localizable"], true);
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(r.data["rows"][n - 1]["u_sum"], -double(n));
    const auto s = cmd_probe(config("probe", "probe_single.json"));
    EXPECT_TRUE(s.passed());
    EXPECT_EQ(s.data["u_zero"], 0.0);
    EXPECT_EQ(s.data["rows"][1]["skipped"], true);
    EXPECT_EQ(s.data["rows"][1]["coefficient"], "nan");
    EXPECT_EQ(find(s, "bump_2")->status, check_status::skipped);
}

TEST(CliReport, JsonAndCsv) {
    report r;
    r.command = "x";
    r.add("a", true, number(infinity));
    r.primary = {{"n", "v"}, {{1, 0.1}}};
    const auto j = r.to_json();
    EXPECT_EQ(j["checks"][0]["value"], "inf");
    EXPECT_EQ(j.dump(), report(r).to_json().dump());
    std::ostringstream csv;
    write_csv(csv, r);
    EXPECT_EQ(csv.str(), "n,v\n1,0.10000000000000001\n");
}

TEST(CliBinary, ExitCodes) {
    EXPECT_EQ(run_cli("eval --config \"" + data_dir + "/eval_coherent.json\""), 0);
    EXPECT_EQ(run_cli("eval --config \"" + data_dir + "/eval_missing.json\""), 2);
    EXPECT_EQ(run_cli("eval --config \"" + data_dir + "/absent.json\""), 2);
    EXPECT_EQ(run_cli("fatou --config \"" + data_dir + "/fatou_boundary.json\""), 1);
    EXPECT_EQ(run_cli("fatou --config \"" + data_dir + "/fatou_interior.json\" --format csv"), 0);
    EXPECT_EQ(run_cli("duality --config \"" + data_dir + "/duality_large.json\""), 2);
    EXPECT_EQ(run_cli("envelope"), 2);
    EXPECT_EQ(run_cli("bogus"), 2);
}
