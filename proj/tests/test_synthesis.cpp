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

#include "subthz/registry.hpp"
#include "subthz/synthesis.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace subthz;
using doctest::Approx;

namespace {

constexpr double fc = 142e9;

CiFit<double> fit_links(const std::vector<LinkRecord>& links) {
    return fit_ci(pathloss_series(links, Category::directional).series, fc, 1.0);
}

// Budget whose margin at distance d equals `margin`.
LinkBudget budget_for_margin(const CiParams<double>& p, double d, double margin) {
    LinkBudget b;
    b.eirp_dbm = 5.0;
    b.rx_gain_dbi = 20.0;
    b.required_snr_db = 10.0;
    b.noise_floor_dbm = b.eirp_dbm + b.rx_gain_dbi - ci_predict(p, d) - b.required_snr_db - margin;
    return b;
}

} // namespace

TEST_CASE("sample_pathloss") {
    const CiParams<double> p{fc, 1.0, 2.9};
    Rng rng(99);
    CHECK(sample_pathloss(p, 0.0, 30.0, rng) == ci_predict(p, 30.0));

    Rng a(7), b(7);
    CHECK(sample_pathloss(p, 9.0, 30.0, a) == sample_pathloss(p, 9.0, 30.0, b));
    CHECK_THROWS_AS(sample_pathloss(p, 9.0, 0.5, a), std::invalid_argument);
    CHECK_THROWS_AS(sample_pathloss(p, -1.0, 5.0, a), std::invalid_argument);
}

TEST_CASE("shadowing draws have the requested moments") {
    const CiParams<double> p{fc, 1.0, 2.3};
    const double mean = ci_predict(p, 40.0);
    Rng rng(2023);
    double sum = 0.0, sum2 = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const double z = sample_pathloss(p, 8.3, 40.0, rng) - mean;
        sum += z;
        sum2 += z * z;
    }
    const double m = sum / n;
    const double sd = std::sqrt((sum2 - n * m * m) / (n - 1));
    CHECK(std::abs(m) <= 0.03);
    CHECK(std::abs(sd - 8.3) <= 0.05);
}

TEST_CASE("substreams are deterministic and distinct") {
    Rng a = substream(5, 0), b = substream(5, 0), c = substream(5, 1), d = substream(6, 0);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("noiseless synthetic campaign round-trips exactly") {
    SynthesisConfig cfg;
    cfg.params = {fc, 1.0, 2.0};
    cfg.sigma_db = 0.0;
    cfg.num_links = 10;
    const auto links = generate_synthetic_campaign(cfg);
    REQUIRE(links.size() == 10);
    for (const auto& l : links) {
        CHECK(l.distance_m >= 1.0);
        CHECK(l.distance_m <= 100.0);
        CHECK(std::get<MpcList>(l.payload).size() == 1);
    }
    const auto fit = fit_links(links);
    CHECK(fit.params.n == Approx(2.0).epsilon(1e-9));
    CHECK(fit.sigma_db < 1e-9);
}

TEST_CASE("noisy round trip recovers the generating parameters") {
    SynthesisConfig cfg;
    cfg.params = {fc, 1.0, 2.9};
    cfg.sigma_db = 9.0;
    cfg.num_links = 500;
    cfg.distance_range_m = {3.0, 66.0};
    for (std::uint64_t seed : {42ull, 7ull}) {
        cfg.seed = seed;
        const auto fit = fit_links(generate_synthetic_campaign(cfg));
        CHECK(std::abs(fit.params.n - 2.9) <= 0.1);
        CHECK(std::abs(fit.sigma_db - 9.0) <= 0.5);
    }
    cfg.seed = 42;
    const auto a = generate_synthetic_campaign(cfg);
    cfg.seed = 7;
    const auto b = generate_synthetic_campaign(cfg);
    CHECK(std::get<MpcList>(a[0].payload)[0].gain_db != std::get<MpcList>(b[0].payload)[0].gain_db);
}

TEST_CASE("generation is reproducible from the seed") {
    SynthesisConfig cfg;
    cfg.params = {fc, 1.0, 2.6};
    cfg.sigma_db = 10.1;
    cfg.num_links = 50;
    cfg.seed = 1234;
    const auto a = generate_synthetic_campaign(cfg);
    const auto b = generate_synthetic_campaign(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].distance_m == b[i].distance_m);
        CHECK(std::get<MpcList>(a[i].payload) == std::get<MpcList>(b[i].payload));
    }
    CHECK(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.id < y.id; }));
}

TEST_CASE("recovery error shrinks with campaign size") {
    auto mean_error = [](int links) {
        double err = 0.0;
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            SynthesisConfig cfg;
            cfg.params = {fc, 1.0, 2.6};
            cfg.sigma_db = 10.1;
            cfg.num_links = links;
            cfg.distance_range_m = {2.0, 172.0};
            cfg.seed = seed;
            err += std::abs(fit_links(generate_synthetic_campaign(cfg)).params.n - 2.6);
        }
        return err / 8.0;
    };
    CHECK(mean_error(5000) < mean_error(50));
}

TEST_CASE("distance laws") {
    SynthesisConfig cfg;
    cfg.params = {fc, 1.0, 2.0};
    cfg.num_links = 2000;
    cfg.distance_range_m = {3.0, 300.0};
    cfg.distance_law = DistanceLaw::log_uniform;
    auto links = generate_synthetic_campaign(cfg);
    // log-uniform: half the links below the geometric midpoint (30 m)
    const auto below = std::count_if(links.begin(), links.end(), [](const auto& l) { return l.distance_m < 30.0; });
    CHECK(std::abs(double(below) / 2000.0 - 0.5) < 0.05);

    cfg.distance_law = DistanceLaw::uniform;
    links = generate_synthetic_campaign(cfg);
    const auto below_mid =
        std::count_if(links.begin(), links.end(), [](const auto& l) { return l.distance_m < 151.5; });
    CHECK(std::abs(double(below_mid) / 2000.0 - 0.5) < 0.05);
    for (const auto& l : links) {
        CHECK(l.distance_m >= 3.0);
        CHECK(l.distance_m <= 300.0);
    }

    cfg.distance_law = DistanceLaw::explicit_list;
    cfg.distances_m = {5.0, 10.0, 20.0};
    links = generate_synthetic_campaign(cfg);
    REQUIRE(links.size() == 3);
    CHECK(links[2].distance_m == 20.0);

    cfg.distances_m = {0.5};
    CHECK_THROWS_AS(generate_synthetic_campaign(cfg), std::invalid_argument);
    cfg.distance_law = DistanceLaw::log_uniform;
    cfg.distance_range_m = {0.5, 10.0};
    CHECK_THROWS_AS(generate_synthetic_campaign(cfg), std::invalid_argument);
    cfg.distance_range_m = {20.0, 10.0};
    CHECK_THROWS_AS(generate_synthetic_campaign(cfg), std::invalid_argument);
    cfg.distance_range_m = {2.0, 10.0};
    cfg.num_links = 0;
    CHECK_THROWS_AS(generate_synthetic_campaign(cfg), std::invalid_argument);
}

TEST_CASE("outage closed form") {
    CHECK(outage_from_margin(0.0, 9.0) == 0.5);
    CHECK(outage_from_margin(3.0, 0.0) == 0.0);
    CHECK(outage_from_margin(-3.0, 0.0) == 1.0);
    CHECK(outage_from_margin(0.0, 0.0) == 0.5);
    CHECK(std::abs(outage_from_margin(9.0, 9.0) - 0.15865525) < 1e-8);
    CHECK(std::abs(outage_from_margin(-9.0, 9.0) - 0.84134475) < 1e-8);
    CHECK(std::abs(outage_from_margin(18.0, 9.0) - 0.02275013) < 1e-8);

    const CiParams<double> p{fc, 1.0, 2.9};
    const auto b = budget_for_margin(p, 25.0, 9.0);
    CHECK(link_margin_db(p, b, 25.0) == Approx(9.0).epsilon(1e-12));
    CHECK(outage_probability(p, 9.0, b, 25.0) == Approx(0.15865525).epsilon(1e-7));
}

TEST_CASE("outage Monte Carlo agrees with the closed form") {
    const CiParams<double> p{fc, 1.0, 2.9};
    const double sigma = 9.0;
    for (double k : {-1.0, 0.0, 1.0, 2.0}) {
        const auto b = budget_for_margin(p, 25.0, k * sigma);
        const double cf = outage_probability(p, sigma, b, 25.0, ClosedForm{});
        const double mc = outage_probability(p, sigma, b, 25.0, MonteCarlo{100000, 17});
        CHECK(std::abs(mc - cf) <= 0.01);
        CHECK(std::abs(mc - cf) <= 3.0 * std::sqrt(cf * (1.0 - cf) / 100000.0) + 1e-12);
        CHECK(mc == outage_probability(p, sigma, b, 25.0, MonteCarlo{100000, 17}));
    }
    const auto b = budget_for_margin(p, 25.0, 0.0);
    CHECK(outage_probability(p, 0.0, b, 25.0, MonteCarlo{1000, 1}) == 0.5);
    CHECK_THROWS_AS(outage_probability(p, 9.0, b, 25.0, MonteCarlo{0, 1}), std::invalid_argument);
}

TEST_CASE("coverage grid") {
    const CiParams<double> p{fc, 1.0, 2.3};
    const LinkBudget budget{5.0, 20.0, -80.0, 10.0};

    SUBCASE("single cell at the reference distance") {
        const auto map = coverage_grid(p, 11.9, budget, GridSpec{1.0, 0.0, 1.0, 1, 1});
        CHECK(map.valid(0, 0));
        CHECK(map.mean_rx_power_dbm(0, 0) == Approx(5.0 + 20.0 - fspl(fc, 1.0)).epsilon(1e-14));
    }
    SUBCASE("radial symmetry") {
        const auto map = coverage_grid(p, 11.9, budget, GridSpec::centered(21, 21, 2.0));
        CHECK_FALSE(map.valid(10, 10));
        CHECK(std::isnan(map.mean_rx_power_dbm(10, 10)));
        for (Eigen::Index i = 0; i < 21; ++i)
            for (Eigen::Index j = 0; j < 21; ++j) {
                if (!map.valid(i, j))
                    continue;
                CHECK(map.mean_rx_power_dbm(i, j) == Approx(map.mean_rx_power_dbm(20 - i, j)).epsilon(1e-12));
                CHECK(map.mean_rx_power_dbm(i, j) == Approx(map.mean_rx_power_dbm(j, i)).epsilon(1e-12));
                CHECK(map.outage(i, j) == Approx(map.outage(i, 20 - j)).epsilon(1e-12));
            }
    }
    SUBCASE("mean power never increases with distance") {
        const auto& e = ModelRegistry::builtin().lookup(Environment::outdoor, Condition::nlos, Category::omnidirectional);
        const CiParams<double> q{fc, 1.0, e.n};
        const auto map = coverage_grid(q, e.sigma_db, budget, GridSpec::centered(100, 100, 2.0));
        std::vector<std::pair<double, double>> cells;
        for (Eigen::Index i = 0; i < 100; ++i)
            for (Eigen::Index j = 0; j < 100; ++j) {
                REQUIRE(map.valid(i, j));
                cells.emplace_back(map.distance_m(i, j), map.mean_rx_power_dbm(i, j));
            }
        std::sort(cells.begin(), cells.end());
        for (std::size_t k = 1; k < cells.size(); ++k)
            CHECK(cells[k].second <= cells[k - 1].second + 1e-9);
    }
    SUBCASE("CSV layout") {
        const auto map = coverage_grid(p, 11.9, budget, GridSpec::centered(3, 2, 1.0));
        const auto csv = coverage_csv(map);
        CHECK(csv.rfind("x_m,y_m,distance_m,mean_rx_power_dbm,outage\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
    }
    CHECK_THROWS_AS(coverage_grid(p, 11.9, budget, GridSpec{0, 0, 1.0, 0, 3}), std::invalid_argument);
}
