#include "qshutter/table.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
    int status = -1;
    std::string out;
};

run_result run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + (env.empty() ? "" : " ") + QSHUTTER_CLI_PATH " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(const char* name)
{
    return std::string(QSHUTTER_GOLDEN_DIR) + "/" + name;
}

} // namespace

TEST_CASE("cli: argument and exit-code contract")
{
    CHECK(run("--help").status == 0);
    CHECK(run("").status == 1);            // a subcommand is required
    CHECK(run("density --bogus").status == 1);
    CHECK(run("density --grid 5:1:10").status == 1);
    CHECK(run("density --x 0 --t 1").status == 1);
    CHECK(run("density --t -1").status == 2);
    CHECK(run("density --x 0 --grid -1:1:5").status == 2); // time sweep must stay t > 0
    CHECK(run("tomogram --mu 0 --nu 1").status == 2);      // singular frame
    CHECK(run("tomogram --mu 1 --tau 0.5").status == 1);   // mixed frame styles
    CHECK(run("classical --x 5").status == 2);             // ahead of the front
    CHECK(run("density --format yaml").status == 1);
}

TEST_CASE("cli: density table shape and forced front value")
{
    run_result r = run("density");
    REQUIRE(r.status == 0);
    qshutter::sample_table t = qshutter::parse_csv(r.out);
    REQUIRE(t.columns == std::vector<std::string>{"x", "t", "w", "density"});
    REQUIRE(t.rows.size() == 121);
    bool found_front = false;
    for (const auto& row : t.rows) {
        if (row[0] == 2.0) { // x = kt with the default k=1, t=2
            found_front = true;
            CHECK(row[2] == 0.0);
            CHECK(row[3] == 0.25);
        }
    }
    CHECK(found_front);
    // Fresnel overshoot behind the front
    double best = 0.0;
    for (const auto& row : t.rows)
        best = std::max(best, row[3]);
    CHECK(best > 1.0);
}

TEST_CASE("cli: density time sweep keeps x fixed")
{
    run_result r = run("density --x 0 --grid 0.1:10:5");
    REQUIRE(r.status == 0);
    qshutter::sample_table t = qshutter::parse_csv(r.out);
    REQUIRE(t.rows.size() == 5);
    for (const auto& row : t.rows) {
        CHECK(row[0] == 0.0);
        CHECK(row[1] > 0.0);
    }
}

TEST_CASE("cli: golden snapshots")
{
    struct golden {
        const char* file;
        const char* args;
    };
    const golden cases[] = {
        {"cornu_default.csv", "cornu --grid -2:2:11"},
        {"density_spatial.csv", "density --k 1 --t 2 --grid -4:4:17"},
        {"wigner_small.csv", "wigner --k 1 --t 1 --grid -1:1:5 --pgrid 0:2:5"},
        {"tomogram_frame.csv", "tomogram --k 1 --t 2 --mu 1 --nu 0.5 --grid -2:6:9"},
    };
    for (const golden& g : cases) {
        CAPTURE(g.file);
        run_result r = run(g.args);
        REQUIRE(r.status == 0);
        CHECK(r.out == read_file(golden_path(g.file)));
    }
}

TEST_CASE("cli: cornu table is antisymmetric")
{
    run_result r = run("cornu --grid -3:3:13");
    REQUIRE(r.status == 0);
    qshutter::sample_table t = qshutter::parse_csv(r.out);
    REQUIRE(t.rows.size() == 13);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto& lo = t.rows[i];
        const auto& hi = t.rows[t.rows.size() - 1 - i];
        CHECK(lo[1] == -hi[1]);
        CHECK(lo[2] == -hi[2]);
    }
}

TEST_CASE("cli: json format")
{
    run_result r = run("wigner --grid -1:1:3 --pgrid 0:2:3 --format json");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["columns"] == nlohmann::json({"x", "p", "W"}));
    CHECK(j["rows"].size() == 9);
}

TEST_CASE("cli: --out writes the same bytes as stdout")
{
    std::string path = "cli_out_test.csv";
    run_result direct = run("cornu --grid -1:1:5");
    run_result filed = run("cornu --grid -1:1:5 --out " + path);
    REQUIRE(direct.status == 0);
    REQUIRE(filed.status == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("cli: config file supplies defaults, flags override")
{
    std::string cfg_path = "cli_cfg_test.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << "{\"grid\": \"-1:1:3\", \"mu\": 2.0, \"nu\": 0.5}\n";
    }
    run_result from_cfg = run("tomogram --config " + cfg_path);
    REQUIRE(from_cfg.status == 0);
    qshutter::sample_table a = qshutter::parse_csv(from_cfg.out);
    REQUIRE(a.rows.size() == 3);

    run_result overridden = run("tomogram --config " + cfg_path + " --mu 1 --nu 0.5");
    REQUIRE(overridden.status == 0);
    qshutter::sample_table b = qshutter::parse_csv(overridden.out);
    REQUIRE(b.rows.size() == 3); // grid still from the config file
    CHECK(a.rows[0][1] != b.rows[0][1]); // rho reflects the overridden frame

    run_result missing = run("tomogram --config no_such_file.json");
    CHECK(missing.status == 1);
    std::remove(cfg_path.c_str());
}

TEST_CASE("cli: fault-injected verify fails naming the broken invariant")
{
    run_result r = run("verify quick", "QSHUTTER_VERIFY_FRESNEL_BIAS=1e-6");
    CHECK(r.status == 3);
    CHECK(r.out.find("fresnel_reflection") != std::string::npos);
    CHECK(r.out.find("FAIL") != std::string::npos);
}
