// SPDX-License-Identifier: Apache-2.0
//
// subthz: close-in path loss, angular spread and link budget toolkit
// Copyright (C) 2026 The subthz authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <algorithm>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

fs::path scratch() {
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("subthz_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

Run run(const std::string& args) {
    const auto out = scratch() / "stdout.txt";
    const auto err = scratch() / "stderr.txt";
    const std::string cmd =
        std::string("\"") + SUBTHZ_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, read_file(out), read_file(err)};
}

std::string data(const char* name) {
    return "\"" + test_data(name).string() + "\"";
}

std::string tmp(const char* name) {
    return "\"" + (scratch() / name).string() + "\"";
}

} // namespace

TEST_CASE("registry query") {
    const auto r = run("registry --env indoor --cond los --cat directional");
    CHECK(r.code == 0);
    CHECK(r.out.find("n = 2.1, sigma = 1.8") != std::string::npos);

    const auto e1 = run("registry export");
    const auto e2 = run("registry export");
    CHECK(e1.code == 0);
    CHECK(e1.out == e2.out);
    CHECK(nlohmann::json::parse(e1.out)["pathloss"].size() == 16);
}

TEST_CASE("synth then fit recovers a noiseless exponent") {
    REQUIRE(run("synth --n 2 --sigma 0 --links 10 --seed 1 --output " + tmp("noiseless.json")).code == 0);
    const auto r = run("fit --input " + tmp("noiseless.json") + " --category directional");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(std::abs(j[0]["n"].get<double>() - 2.0) < 1e-9);
    CHECK(j[0]["sigma_db"].get<double>() < 1e-9);
}

TEST_CASE("synth then fit recovers noisy parameters") {
    REQUIRE(run("synth --n 2.9 --sigma 9 --links 500 --d-min-m 3 --d-max-m 66 --seed 42 --output " + tmp("noisy.json"))
                .code == 0);
    const auto r = run("fit --input " + tmp("noisy.json") + " --output " + tmp("noisy_fit.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("directional LoS: n = ") != std::string::npos);
    const auto j = nlohmann::json::parse(read_file(scratch() / "noisy_fit.json"));
    CHECK(std::abs(j[0]["n"].get<double>() - 2.9) <= 0.1);
    CHECK(std::abs(j[0]["sigma_db"].get<double>() - 9.0) <= 0.5);
    CHECK(fs::exists(scratch() / "noisy_fit.points.csv"));
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("fit --input " + data("three_mpc.csv") + " --category kth 4").code == 1);
    CHECK(run("validate --input " + data("three_mpc.csv") + " --bogus").code == 1);
    CHECK(run("").code == 1);
    CHECK(run("--help").code == 0);
}

TEST_CASE("validate") {
    auto r = run("validate --input " + data("malformed.json"));
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    r = run("validate --input " + data("invalid_distance.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("BAD7") != std::string::npos);

    r = run("validate --input " + data("city_center_mpcs.csv"));
    CHECK(r.code == 0);
    CHECK(r.out.find("40 links (19 LoS, 21 NLoS)") != std::string::npos);

    r = run("asa --input " + data("empty.json"));
    CHECK(r.code == 2);
    CHECK(r.err.find("no links") != std::string::npos);
}

TEST_CASE("asa per-link output") {
    const auto r = run("asa --input " + data("three_mpc.csv") + " --output " + tmp("asa.csv"));
    CHECK(r.code == 0);
    const auto csv = read_file(scratch() / "asa.csv");
    CHECK(csv.rfind("link_id,distance_m,condition,mu_asa_deg,s_a_deg\n", 0) == 0);
    CHECK(csv.find("T1,10,LoS,90,73.48469") != std::string::npos);
    CHECK(csv.find("T3,150,NLoS,200,0\n") != std::string::npos);
    const auto agg = nlohmann::json::parse(read_file(scratch() / "asa.aggregate.json"));
    CHECK(agg["NLoS"]["count"] == 2);
}

TEST_CASE("coverage at a single distance") {
    const auto r = run("coverage --n 2.9 --sigma 9 --at-m 25 --trials 20000 --seed 3");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const double cf = j["outage_closed_form"].get<double>();
    const double mc = j["outage_monte_carlo"].get<double>();
    CHECK(cf >= 0.0);
    CHECK(cf <= 1.0);
    CHECK(std::abs(mc - cf) < 0.02);

    const auto g = run("coverage --env outdoor --cond nlos --category omni --nx 5 --ny 4 --cell-m 2");
    CHECK(g.code == 0);
    CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 21);
}

TEST_CASE("report compares fits with the registry") {
    const auto r = run("report --input " + data("city_center_mpcs.csv") + " --env outdoor");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pathloss"].size() == 8);
    CHECK(j.contains("asa"));
}
