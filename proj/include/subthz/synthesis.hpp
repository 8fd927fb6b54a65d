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

// Shadowed channel synthesis and link budget evaluation on top of the CI
// model. Shadowing is i.i.d. N(0, sigma^2) in dB per link, without spatial
// correlation.
//
// Random numbers come from std::mt19937_64 (bit-exact across standard
// libraries) feeding std::normal_distribution / std::uniform_real_distribution
// (reproducible for a given standard library build). Parallel substreams are
// seeded with splitmix64(seed ^ splitmix64(index)).

#ifndef SUBTHZ_SYNTHESIS_HPP
#define SUBTHZ_SYNTHESIS_HPP

#include "subthz/ci_model.hpp"
#include "subthz/measurement.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace subthz {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent generator for substream `index` of `seed`.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index)));
}

/// Mean CI path loss at d plus one N(0, sigma^2) shadowing draw from rng.
/// One normal variate is consumed even when sigma is zero.
template <typename Scalar>
Scalar sample_pathloss(const CiParams<Scalar>& params, Scalar sigma_db, Scalar d_m, Rng& rng) {
    if (!(sigma_db >= Scalar(0)))
        throw std::invalid_argument("sample_pathloss: sigma must be non-negative");
    const Scalar mean = ci_predict(params, d_m);
    std::normal_distribution<Scalar> normal(Scalar(0), Scalar(1));
    return mean + sigma_db * normal(rng);
}

enum class DistanceLaw { log_uniform, uniform, explicit_list };

struct SynthesisConfig {
    CiParams<double> params;
    double sigma_db = 0.0;
    std::uint64_t seed = 1;
    int num_links = 10;
    DistanceLaw distance_law = DistanceLaw::log_uniform;
    std::pair<double, double> distance_range_m{1.0, 100.0};
    std::vector<double> distances_m;  // used by explicit_list
    Condition condition = Condition::los;
};

/// Links with a single MPC each whose gain is minus a sampled path loss.
/// Link ids are zero-padded so that id order equals generation order.
std::vector<LinkRecord> generate_synthetic_campaign(const SynthesisConfig& cfg);

struct LinkBudget {
    double eirp_dbm = 5.0;
    double rx_gain_dbi = 0.0;
    double noise_floor_dbm = -90.0;
    double required_snr_db = 10.0;
};

// eirp + rx_gain - mean PL(d) - (noise_floor + required_snr)
double link_margin_db(const CiParams<double>& params, const LinkBudget& budget, double d_m);

// P[shadowing > margin] = Q(margin / sigma). With sigma == 0 the result is
// 0 for positive margins, 1 for negative ones and 0.5 at exactly zero.
double outage_from_margin(double margin_db, double sigma_db);

struct ClosedForm {};
struct MonteCarlo {
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
};
using OutageMode = std::variant<ClosedForm, MonteCarlo>;

/// Probability that the shadowed received power misses the noise floor plus
/// required SNR at distance d. Monte Carlo trials are drawn in fixed blocks,
/// each from its own substream, so the estimate does not depend on
/// evaluation order.
double outage_probability(const CiParams<double>& params, double sigma_db, const LinkBudget& budget, double d_m,
                          const OutageMode& mode = ClosedForm{});

// Cell (row i, column j) is centered at (x0 + j cell, y0 + i cell) with the
// transmitter at the origin.
struct GridSpec {
    double x0_m = 0.0;
    double y0_m = 0.0;
    double cell_m = 1.0;
    Eigen::Index nx = 1;
    Eigen::Index ny = 1;

    // nx by ny cells centered on the transmitter.
    static GridSpec centered(Eigen::Index nx, Eigen::Index ny, double cell_m) {
        return {-0.5 * double(nx - 1) * cell_m, -0.5 * double(ny - 1) * cell_m, cell_m, nx, ny};
    }
};

template <typename Scalar>
struct CoverageMap {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Matrix x_m;
    Matrix y_m;
    Matrix distance_m;
    Matrix mean_rx_power_dbm;  // NaN where !valid
    Matrix outage;             // NaN where !valid
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> valid;  // false for cells closer than d0
};

/// Mean received power and closed-form outage per grid cell.
template <typename Scalar>
CoverageMap<Scalar> coverage_grid(const CiParams<Scalar>& params, Scalar sigma_db, const LinkBudget& budget,
                                  const GridSpec& grid) {
    if (grid.nx < 1 || grid.ny < 1)
        throw std::invalid_argument("coverage_grid: empty grid");
    if (!(grid.cell_m > 0.0))
        throw std::invalid_argument("coverage_grid: cell size must be positive");
    params.validate();

    using Matrix = typename CoverageMap<Scalar>::Matrix;
    using Row = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
    using Col = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Row xs = Row::LinSpaced(grid.nx, Scalar(grid.x0_m), Scalar(grid.x0_m + double(grid.nx - 1) * grid.cell_m));
    const Col ys = Col::LinSpaced(grid.ny, Scalar(grid.y0_m), Scalar(grid.y0_m + double(grid.ny - 1) * grid.cell_m));

    CoverageMap<Scalar> map;
    map.x_m = xs.replicate(grid.ny, 1);
    map.y_m = ys.replicate(1, grid.nx);
    map.distance_m = (map.x_m.array().square() + map.y_m.array().square()).sqrt().matrix();
    map.valid = map.distance_m.array() >= params.d0_m;

    const Scalar nan = std::numeric_limits<Scalar>::quiet_NaN();
    map.mean_rx_power_dbm = Matrix::Constant(grid.ny, grid.nx, nan);
    map.outage = Matrix::Constant(grid.ny, grid.nx, nan);
    const Scalar threshold = Scalar(budget.noise_floor_dbm + budget.required_snr_db);
    for (Eigen::Index j = 0; j < grid.nx; ++j) {
        for (Eigen::Index i = 0; i < grid.ny; ++i) {
            if (!map.valid(i, j))
                continue;
            const Scalar power =
                Scalar(budget.eirp_dbm + budget.rx_gain_dbi) - ci_predict(params, map.distance_m(i, j));
            map.mean_rx_power_dbm(i, j) = power;
            map.outage(i, j) = Scalar(outage_from_margin(double(power - threshold), double(sigma_db)));
        }
    }
    return map;
}

// CSV: x_m,y_m,distance_m,mean_rx_power_dbm,outage; row-major over the grid,
// blank power and outage cells for positions inside d0.
std::string coverage_csv(const CoverageMap<double>& map);

} // namespace subthz

#endif
