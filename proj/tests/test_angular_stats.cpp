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

#include "subthz/angular_stats.hpp"
#include "subthz/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

using namespace subthz;
using doctest::Approx;

namespace {

AsaSample sample(std::string id, double s_a, double d = 10.0, Condition c = Condition::nlos,
                 Environment e = Environment::indoor) {
    return {std::move(id), 0.0, s_a, d, c, e};
}

} // namespace

TEST_CASE("mu_asa and asa hand examples") {
    const MpcList one{{123, -97}};
    CHECK(mu_asa(one) == 123.0);
    CHECK(asa(one) == 0.0);

    const MpcList three{{0, -90}, {90, -90}, {180, -90}};
    CHECK(mu_asa(three) == Approx(90.0).epsilon(1e-14));
    CHECK(std::abs(asa(three) - 73.48469228) < 1e-3);
    CHECK(asa(three) == Approx(std::sqrt(5400.0)).epsilon(1e-12));

    const MpcList two{{0, -90}, {90, -90}};
    CHECK(mu_asa(two) == Approx(45.0));
    CHECK(asa(two) == Approx(45.0));
}

TEST_CASE("unequal amplitudes weight by amplitude squared") {
    // 6 dB amplitude ratio 10^(-6/20): weight ratio 10^(-0.6)
    const MpcList m{{0, -90}, {100, -96}};
    const double w = std::pow(10.0, -0.6);
    const double mu = 100.0 * w / (1.0 + w);
    CHECK(mu_asa(m) == Approx(mu).epsilon(1e-12));
    CHECK(asa(m) == Approx(std::sqrt((mu * mu + w * (100.0 - mu) * (100.0 - mu)) / (1.0 + w))).epsilon(1e-12));
}

TEST_CASE("Eigen kernels") {
    Eigen::Vector3d phi(0.0, 90.0, 180.0), amp(1.0, 1.0, 1.0);
    CHECK(weighted_mean_angle(phi, amp) == Approx(90.0));
    CHECK(weighted_angle_spread(phi, amp) == Approx(std::sqrt(5400.0)));
    Eigen::Vector3f phif(0.0f, 90.0f, 180.0f), ampf(1.0f, 1.0f, 1.0f);
    CHECK(weighted_angle_spread(phif, ampf) == Approx(73.4847).epsilon(1e-5));
    CHECK_THROWS_AS(weighted_mean_angle(phi, Eigen::Vector3d::Zero()), std::invalid_argument);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(mu_asa(MpcList{}), std::invalid_argument);
    CHECK_THROWS_AS(asa(MpcList{{0, -1}, {1, -2}, {2, -3}, {3, -4}}), std::invalid_argument);
    const double ninf = -std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(asa(MpcList{{0, ninf}, {10, ninf}}), std::invalid_argument);
}

TEST_CASE("unwrap about the strongest MPC") {
    const MpcList m{{350, -90}, {10, -90}};
    CHECK(mu_asa(m) == Approx(180.0));
    CHECK(asa(m) == Approx(170.0));
    const AsaOptions unwrap{true};
    CHECK(mu_asa(m, unwrap) == Approx(0.0).epsilon(1e-12));
    CHECK(asa(m, unwrap) == Approx(10.0));
    const MpcList n{{10, -90}, {350, -95}};
    const double mu = mu_asa(n, unwrap);
    CHECK(mu >= 0.0);
    CHECK(mu < 360.0);
}

TEST_CASE("properties over random MPC sets") {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> az(0.0, 360.0), gain(-130.0, -80.0), scale_db(-60.0, 60.0);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 500; ++trial) {
        MpcList m;
        const int k = count(rng);
        for (int i = 0; i < k; ++i)
            m.push_back({az(rng), gain(rng)});
        const double mu = mu_asa(m);
        const double s = asa(m);
        CHECK(s >= 0.0);

        // scale invariance: amplitudes times any k > 0
        MpcList scaled = m;
        const double shift = scale_db(rng);
        for (auto& x : scaled)
            x.gain_db += shift;
        CHECK(std::abs(mu_asa(scaled) - mu) <= 1e-12 * std::max(1.0, mu));
        CHECK(std::abs(asa(scaled) - s) <= 1e-12 * std::max(1.0, s));

        // bounded by the largest deviation
        double max_dev = 0.0;
        for (const auto& x : m)
            max_dev = std::max(max_dev, std::abs(x.azimuth_deg - mu));
        CHECK(s <= max_dev + 1e-9);

        // permutation invariance
        MpcList perm = m;
        std::reverse(perm.begin(), perm.end());
        CHECK(asa(perm) == Approx(s).epsilon(1e-12));
        CHECK(mu_asa(perm) == Approx(mu).epsilon(1e-12));

        // zero spread iff a single shared azimuth
        MpcList same = m;
        for (auto& x : same)
            x.azimuth_deg = m[0].azimuth_deg;
        CHECK(asa(same) == Approx(0.0).epsilon(1e-12));
        if (k > 1)
            CHECK(s > 0.0);
    }
}

TEST_CASE("Eigen kernel scale invariance on raw amplitudes") {
    Eigen::Vector3d phi(12.0, 200.0, 301.5), amp(1.0, 0.4, 0.07);
    const double s = weighted_angle_spread(phi, amp);
    for (double k : {1e-6, 0.3, 7.0, 1e5}) {
        const Eigen::Vector3d scaled = amp * k;
        CHECK(std::abs(weighted_angle_spread(phi, scaled) - s) <= 1e-12 * s);
        CHECK(std::abs(weighted_mean_angle(phi, scaled) - weighted_mean_angle(phi, amp)) <= 1e-12 * 200.0);
    }
}

TEST_CASE("aggregate_asa") {
    const std::vector<AsaSample> single{sample("a", 40.0)};
    auto st = aggregate_asa(single, Environment::indoor, Condition::nlos);
    CHECK(st.mean_deg == 40.0);
    CHECK(st.std_deg == 0.0);
    CHECK(st.count == 1);

    const std::vector<AsaSample> pair{sample("a", 0.0), sample("b", 90.0), sample("c", 500.0, 10.0, Condition::los),
                                      sample("d", 500.0, 10.0, Condition::nlos, Environment::outdoor)};
    st = aggregate_asa(pair, Environment::indoor, Condition::nlos);
    CHECK(st.count == 2);
    CHECK(st.mean_deg == Approx(45.0));
    CHECK(st.std_deg == Approx(63.63961031).epsilon(1e-9));

    CHECK_THROWS_AS(aggregate_asa(pair, Environment::outdoor, Condition::los), ComputationError);
}

TEST_CASE("asa_vs_distance sorts by distance then id") {
    const std::vector<AsaSample> s{sample("z", 1.0, 50.0), sample("b", 2.0, 20.0), sample("a", 3.0, 20.0),
                                   sample("m", 4.0, 5.0)};
    const auto out = asa_vs_distance(s);
    std::vector<std::string> ids;
    for (const auto& x : out)
        ids.push_back(x.link_id);
    CHECK(ids == std::vector<std::string>{"m", "a", "b", "z"});
}

TEST_CASE("long links dominated by one MPC have near-zero spread") {
    std::vector<AsaSample> samples;
    for (int i = 0; i < 10; ++i) {
        const double d = 20.0 + 20.0 * i;
        MpcList m{{double(30 * i), -100.0}};
        if (d <= 100.0) {
            m.push_back({double(30 * i + 120), -103.0});
            m.push_back({double(30 * i + 200), -106.0});
        }
        samples.push_back(asa_sample({"L" + std::to_string(i), d, Condition::nlos, m}, Environment::outdoor));
    }
    for (const auto& s : asa_vs_distance(samples)) {
        if (s.distance_m > 100.0)
            CHECK(s.s_a_deg == 0.0);
        else
            CHECK(s.s_a_deg > 10.0);
    }
}

TEST_CASE("asa_sample keeps the three strongest") {
    const LinkRecord link{"X", 12.0, Condition::los, MpcList{{0, -90}, {90, -90}, {180, -90}, {270, -91}}};
    const auto s = asa_sample(link, Environment::indoor);
    CHECK(s.mu_asa_deg == Approx(90.0));
    CHECK(s.s_a_deg == Approx(std::sqrt(5400.0)));
}
