// SPDX-License-Identifier: Apache-2.0
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

#ifndef BCCE_TYPES_HPP
#define BCCE_TYPES_HPP

#include <Eigen/Dense>
#include <vector>

#include "bcce/config.hpp"
#include "bcce/seed.hpp"

namespace bcce {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// One draw of the K x N downlink matrix; row k is h_k^dagger.
struct ChannelRealization {
    CMatrix h;
    SeedPlan seed_trace;

    int n_users() const { return static_cast<int>(h.rows()); }
    int n_antennas() const { return static_cast<int>(h.cols()); }
};

/// Eavesdroppers inside a disc of radius window_radius centred on the base station.
/// Point i sits at distance distances[i] and sees channel column channels.col(i).
struct EavesdropperField {
    RVector distances;
    CMatrix channels;  ///< N x size()
    double window_radius = 0.0;
    /// Expected sum of ||e||^-eta over the PPP outside the window, per unit fading gain.
    /// Nonzero only when the window was capped; colluding SINRs add it as a mean-field term.
    double tail_path_gain = 0.0;

    int size() const { return static_cast<int>(distances.size()); }
    bool empty() const { return distances.size() == 0; }
};

/// Single-direction field: the fading projection |h_e^dagger w|^2 already drawn for one
/// precoding vector, so no N-vector is stored.
struct ProjectedField {
    RVector distances;
    RVector gains;
    double window_radius = 0.0;
    double tail_path_gain = 0.0;
    double w_norm2 = 0.0;  ///< squared norm of the direction the gains were drawn for

    int size() const { return static_cast<int>(distances.size()); }
};

/// Instantaneous SINRs (linear) for every user of one realization.
struct SinrReport {
    RVector legit;
    RVector malicious;
    RVector external;
    CollusionMode mode = CollusionMode::NonColluding;
};

/// Closed-form large-system quantities for one configuration.
struct LargeSystemPoint {
    double gamma_ls = 0.0;
    double gamma_m_ls = 0.0;
    double r_bcc_ls = 0.0;
    double outage_ls = 0.0;
    double p_ls = 0.0;
    double r_mean_ls = 0.0;
    double delta_e = 0.0;
    double delta_ub = 0.0;
    double mu = 0.0;
    double nu = 0.0;
};

}  // namespace bcce

#endif
