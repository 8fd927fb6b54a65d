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

// Close-in free-space reference distance (CI) path loss model:
//
//   PL(d) = FSPL(fc, d0) + 10 n log10(d / d0) + X,   X ~ N(0, sigma^2) [dB]
//
// with the path loss exponent n and shadow fading deviation sigma estimated
// by minimum mean square error over measured (d, PL) pairs.

#ifndef SUBTHZ_CI_MODEL_HPP
#define SUBTHZ_CI_MODEL_HPP

#include "subthz/error.hpp"
#include "subthz/series.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subthz {

template <typename Scalar>
inline constexpr Scalar speed_of_light = Scalar(299792458.0);

inline constexpr double default_fc_hz = 142.0e9;
inline constexpr double default_d0_m = 1.0;

template <typename Scalar>
struct CiParams {
    Scalar fc_hz = Scalar(default_fc_hz);
    Scalar d0_m = Scalar(default_d0_m);
    Scalar n = Scalar(2);

    // Throws std::invalid_argument unless fc > 0, d0 > 0 and n in (0, 10).
    void validate() const {
        if (!(fc_hz > Scalar(0)))
            throw std::invalid_argument("carrier frequency must be positive");
        if (!(d0_m > Scalar(0)))
            throw std::invalid_argument("reference distance must be positive");
        if (!(n > Scalar(0) && n < Scalar(10)))
            throw std::invalid_argument("path loss exponent outside (0, 10)");
    }
};

template <typename Scalar>
struct CiFit {
    CiParams<Scalar> params;
    Scalar sigma_db = Scalar(0);
    Eigen::Index num_points = 0;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> residuals_db;
};

template <typename Scalar>
struct ResidualStats {
    Scalar mean_db;
    Scalar std_db;  // root mean square about zero, divisor N; equals CiFit::sigma_db
    Scalar max_abs_db;
};

/// Friis free-space path loss in dB between isotropic antennas.
template <typename Scalar>
Scalar fspl(Scalar fc_hz, Scalar d_m) {
    if (!(fc_hz > Scalar(0)) || !(d_m > Scalar(0)))
        throw std::invalid_argument("fspl: frequency and distance must be positive");
    using std::log10;
    return Scalar(20) * log10(Scalar(4) * std::numbers::pi_v<Scalar> * d_m * fc_hz / speed_of_light<Scalar>);
}

/// Coefficient-wise free-space path loss over an array of distances.
template <typename Derived>
auto fspl(typename Derived::Scalar fc_hz, const Eigen::ArrayBase<Derived>& d_m) {
    using Scalar = typename Derived::Scalar;
    if (!(fc_hz > Scalar(0)) || !((d_m > Scalar(0)).all()))
        throw std::invalid_argument("fspl: frequency and distance must be positive");
    const Scalar k = Scalar(4) * std::numbers::pi_v<Scalar> * fc_hz / speed_of_light<Scalar>;
    return (Scalar(20) * (k * d_m.derived()).log10()).eval();
}

/// Mean CI path loss at distance d (no shadowing). Requires d >= d0.
template <typename Scalar>
Scalar ci_predict(const CiParams<Scalar>& p, Scalar d_m) {
    p.validate();
    if (d_m < p.d0_m)
        throw std::invalid_argument("ci_predict: distance below reference distance");
    using std::log10;
    return fspl(p.fc_hz, p.d0_m) + Scalar(10) * p.n * log10(d_m / p.d0_m);
}

template <typename Derived>
auto ci_predict(const CiParams<typename Derived::Scalar>& p, const Eigen::ArrayBase<Derived>& d_m) {
    using Scalar = typename Derived::Scalar;
    p.validate();
    if ((d_m < p.d0_m).any())
        throw std::invalid_argument("ci_predict: distance below reference distance");
    return (fspl(p.fc_hz, p.d0_m) + Scalar(10) * p.n * (d_m.derived() / p.d0_m).log10()).eval();
}

/// Closed-form MMSE fit of the path loss exponent through the FSPL(d0)
/// anchor. With A = PL - FSPL(fc, d0) and D = 10 log10(d / d0):
///
///   n = <A, D> / <D, D>,   r = A - n D,   sigma = sqrt(<r, r> / N)
///
/// Throws std::invalid_argument for mismatched sizes, fewer than two points,
/// distances below d0 or non-finite path loss; ComputationError when every
/// distance equals d0 or the fitted exponent leaves (0, 10).
template <typename DerivedD, typename DerivedP>
CiFit<typename DerivedD::Scalar> fit_ci(const Eigen::MatrixBase<DerivedD>& distance_m,
                                        const Eigen::MatrixBase<DerivedP>& pathloss_db,
                                        typename DerivedD::Scalar fc_hz,
                                        typename DerivedD::Scalar d0_m) {
    using Scalar = typename DerivedD::Scalar;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    if (distance_m.size() != pathloss_db.size())
        throw std::invalid_argument("fit_ci: distance and path loss sizes differ");
    if (distance_m.size() < 2)
        throw std::invalid_argument("fit_ci: need at least 2 points");
    if (!(fc_hz > Scalar(0)) || !(d0_m > Scalar(0)))
        throw std::invalid_argument("fit_ci: frequency and reference distance must be positive");
    if ((distance_m.array() < d0_m).any())
        throw std::invalid_argument("fit_ci: distance below reference distance");
    if (!pathloss_db.allFinite())
        throw std::invalid_argument("fit_ci: non-finite path loss");

    const Vector log_distance = (Scalar(10) * (distance_m.array() / d0_m).log10()).matrix();
    const Vector excess = (pathloss_db.array() - fspl(fc_hz, d0_m)).matrix();

    const Scalar dd = log_distance.squaredNorm();
    if (!(dd > Scalar(0)))
        throw ComputationError("fit_ci: all distances equal the reference distance");

    CiFit<Scalar> fit;
    fit.params = {fc_hz, d0_m, excess.dot(log_distance) / dd};
    fit.num_points = distance_m.size();
    fit.residuals_db = excess - fit.params.n * log_distance;
    using std::sqrt;
    fit.sigma_db = sqrt(fit.residuals_db.squaredNorm() / Scalar(fit.num_points));

    if (!(fit.params.n > Scalar(0) && fit.params.n < Scalar(10)))
        throw ComputationError("fit_ci: fitted exponent " + std::to_string(double(fit.params.n)) +
                               " outside (0, 10)");
    return fit;
}

inline CiFit<double> fit_ci(const PathLossSeries& series, double fc_hz = default_fc_hz,
                            double d0_m = default_d0_m) {
    return fit_ci(series.distance_m, series.pathloss_db, fc_hz, d0_m);
}

template <typename Scalar>
ResidualStats<Scalar> residual_stats(const CiFit<Scalar>& fit) {
    const auto& r = fit.residuals_db;
    if (r.size() == 0)
        return {Scalar(0), Scalar(0), Scalar(0)};
    using std::sqrt;
    return {r.mean(), sqrt(r.squaredNorm() / Scalar(r.size())), r.cwiseAbs().maxCoeff()};
}

} // namespace subthz

#endif
