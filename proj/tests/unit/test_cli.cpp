// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ampcap/cli/cli.hpp"
#include "ampcap/cli/run_config.hpp"
#include "ampcap/cli/table.hpp"

namespace fs = std::filesystem;
using ampcap::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("#", 0) != 0) {
            out.push_back(line);
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) {
        out.push_back(f);
    }
    return out;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("ampcap_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("number and field formatting") {
    CHECK(ampcap::cli::format_number(0.8603473822708859) == "8.60347382e-01");
    CHECK(ampcap::cli::format_number(1.0) == "1.00000000e+00");
    CHECK(ampcap::cli::format_number(NAN) == "nan");
    CHECK(ampcap::cli::csv_escape("plain") == "plain");
    CHECK(ampcap::cli::csv_escape("a,b") == "\"a,b\"");
    CHECK(ampcap::cli::csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("figure2 sweep") {
    const auto r = invoke({"capacity", "--mode", "figure2", "--grid-min", "1e-2", "--grid-max", "1e2", "--grid-points", "5"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "r_eff,C,C0");
    CHECK(lines[3] == "1.00000000e+00,8.60347382e-01,1.00000000e+00");
    CHECK(r.out.rfind("#@ tool=ampcap\n#@ version=1.0.0\n#@ subcommand=capacity\n", 0) == 0);
}

TEST_CASE("figure3 sweep reaches the threshold value") {
    const auto r = invoke({"capacity", "--mode", "figure3", "--grid-points", "9"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 19);
    CHECK(lines[0] == "mfp_ratio,length_ratio,C_heterodyne,C_holevo,C_holevo_err,C_infinity");
    CHECK(r.out.find("#@ mfp-ratios=0.05,0.14\n") != std::string::npos);
    for (std::size_t i : {9u, 18u}) {
        const auto f = split(lines[i]);
        CHECK(std::abs(std::stod(f[2]) - std::stod(f[3])) < 1e-3);
        CHECK(std::abs(std::stod(f[3]) - std::stod(f[5])) < 1e-3);
    }
}

TEST_CASE("capacity usage errors exit with code 2") {
    auto r = invoke({"capacity", "--grid-points", "0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("grid") != std::string::npos);
    r = invoke({"capacity", "--mode", "point", "--mfp-ratio", "-0.1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("mfp_ratio") != std::string::npos);
    r = invoke({"capacity", "--mode", "figure3", "--grid-max", "3.2"});
    CHECK(r.code == 2);
    r = invoke({"capacity", "--mode", "sideways"});
    CHECK(r.code == 2);
    r = invoke({"nonsense"});
    CHECK(r.code == 2);
    r = invoke({});
    CHECK(r.code == 2);
}

TEST_CASE("point evaluation from raw lengths") {
    const auto a = invoke({"capacity", "--mode", "point", "--mfp-ratio", "0.1", "--length-ratio", "1.5707963267948966",
                           "--power-per-mode", "1"});
    const auto b = invoke({"capacity", "--mode", "point", "--length", "100", "--mfp", "10", "--amp-length",
                           "63.66197723675813", "--power-per-mode", "1"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    const auto fa = split(data_lines(a.out)[1]);
    const auto fb = split(data_lines(b.out)[1]);
    CHECK(fa[9] == "3.95036759e-01");
    CHECK(fa[9] == fb[9]);
    CHECK(fa[13] == "B");
}

TEST_CASE("config files and replay") {
    TempDir tmp;
    const auto first = tmp.file("first.csv");
    REQUIRE(invoke({"capacity", "--mode", "figure3", "--grid-points", "4", "--mfp-ratios", "0.03,0.1", "--out", first})
                .code == 0);
    const auto replay = tmp.file("replay.csv");
    REQUIRE(invoke({"capacity", "--config", first, "--out", replay}).code == 0);
    CHECK(slurp(first) == slurp(replay));

    const auto json_first = tmp.file("first.json");
    REQUIRE(invoke({"capacity", "--grid-points", "3", "--format", "json", "--out", json_first}).code == 0);
    const auto json_replay = tmp.file("replay.json");
    REQUIRE(invoke({"capacity", "--config", json_first, "--out", json_replay}).code == 0);
    CHECK(slurp(json_first) == slurp(json_replay));
    const auto doc = nlohmann::json::parse(slurp(json_first));
    CHECK(doc["rows"].size() == 3);

    const auto cfg = tmp.file("sweep.cfg");
    std::ofstream(cfg) << "# sweep settings\nmode = figure2\ngrid-points=3\n\n";
    const auto over = invoke({"capacity", "--config", cfg, "--grid-points", "5"});
    REQUIRE(over.code == 0);
    CHECK(data_lines(over.out).size() == 6);
    CHECK(over.out.find("#@ grid-points=5\n") != std::string::npos);

    std::ofstream(tmp.file("bad.cfg")) << "no-such-key=1\n";
    CHECK(invoke({"capacity", "--config", tmp.file("bad.cfg")}).code == 2);
    CHECK(invoke({"validate", "--config", first}).code == 2);
    CHECK(invoke({"capacity", "--config", tmp.file("missing.cfg")}).code == 2);
}

TEST_CASE("validate passes, detects perturbations and flags low power") {
    TempDir tmp;
    const auto a = tmp.file("a.csv");
    const auto b = tmp.file("b.csv");
    CHECK(invoke({"validate", "--grid-points", "20", "--samples", "20000", "--out", a}).code == 0);
    CHECK(invoke({"validate", "--grid-points", "20", "--samples", "20000", "--threads", "3", "--out", b}).code == 0);
    CHECK(slurp(a) == slurp(b));

    const auto bad = invoke({"validate", "--grid-points", "20", "--samples", "20000", "--perturb"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL") != std::string::npos);

    const auto low = invoke({"validate", "--grid-points", "5", "--samples", "100"});
    CHECK(low.code == 0);
    for (const auto& line : data_lines(low.out)) {
        if (line.find("monte_carlo") != std::string::npos || line.find("mutual") != std::string::npos) {
            CHECK(line.find("low_power") != std::string::npos);
        }
        if (line.find("quadrature") != std::string::npos) {
            CHECK(line.find("low_power") == std::string::npos);
            CHECK(line.find(",relative,") != std::string::npos);
        }
    }
}

TEST_CASE("simulate writes samples and a summary") {
    TempDir tmp;
    const std::vector<std::string> base{"simulate", "--width", "6", "--length", "30", "--samples", "50", "--seed", "9"};
    auto args = base;
    args.insert(args.end(), {"--out", tmp.file("a.csv"), "--summary", tmp.file("a.json")});
    REQUIRE(invoke(args).code == 0);
    args = base;
    args.insert(args.end(), {"--threads", "4", "--out", tmp.file("b.csv"), "--summary", tmp.file("b.json")});
    REQUIRE(invoke(args).code == 0);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
    CHECK(slurp(tmp.file("a.json")) == slurp(tmp.file("b.json")));

    const auto lines = data_lines(slurp(tmp.file("a.csv")));
    REQUIRE(lines.size() == 51);
    CHECK(lines[0] == "sample_index,tau,sigma,min_eig,seed");
    const auto summary = nlohmann::json::parse(slurp(tmp.file("a.json")))["summary"];
    CHECK(summary["unitarity_max_violation"].get<double>() <= 1e-10);
    const double p = summary["ks_p_value"].get<double>();
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(summary.contains("tau_bar_hat"));
    CHECK(summary.contains("sigma_bar_hat"));
    CHECK(summary.contains("min_eig"));

    const auto json = invoke({"simulate", "--width", "4", "--length", "10", "--samples", "5", "--format", "json"});
    REQUIRE(json.code == 0);
    CHECK(nlohmann::json::parse(json.out)["rows"].size() == 5);
}

TEST_CASE("simulate reports lasing with the sample index") {
    const auto r = invoke({"simulate", "--width", "1", "--length", "1", "--disorder", "0", "--gain", "2", "--samples", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("sample 0") != std::string::npos);
    CHECK(invoke({"simulate", "--width", "0"}).code == 2);
}

TEST_CASE("separatrix output") {
    const auto r = invoke({"separatrix", "--grid-min", "0.05", "--grid-max", "0.2", "--grid-points", "2", "--asymptote",
                           "--power-min", "1e-8", "--points-per-decade", "40"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "mfp_ratio,power_per_mode,residual,branch_info,asymptote");
    const auto root = split(lines[1]);
    CHECK(std::abs(std::stod(root[1]) / 0.015672983812952387 - 1.0) < 1e-7);
    CHECK(std::abs(std::stod(root[2])) <= 1e-9);
    CHECK(root[3] == "single");
    CHECK(root[4] == "1.47762497e-02");
    CHECK(lines[2].rfind("2.00000000e-01,nan,nan,no_root(", 0) == 0);
}
