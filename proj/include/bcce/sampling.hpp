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

#ifndef BCCE_SAMPLING_HPP
#define BCCE_SAMPLING_HPP

#include "bcce/config.hpp"
#include "bcce/seed.hpp"
#include "bcce/types.hpp"

namespace bcce {

inline constexpr double kDefaultWindowRadius = 30.0;

/// K x N matrix with i.i.d. CN(0,1) entries drawn from plan's substream.
ChannelRealization sample_channel(const SystemConfig& cfg, const SeedPlan& plan);

/// PPP of density lambda_e on the disc of radius window_radius. Positions use the Field
/// substream of `plan`; the CN(0, I_N) channel vectors use the EveChannel substream.
EavesdropperField sample_eavesdropper_field(const SystemConfig& cfg, const SeedPlan& plan,
                                            double window_radius);

/// Same positions as sample_eavesdropper_field() for the same plan, but each point carries only
/// |h_e^dagger w|^2 for a fixed direction with ||w||^2 = w_norm2 (an Exp draw of mean w_norm2).
ProjectedField sample_projected_field(const SystemConfig& cfg, const SeedPlan& plan,
                                      double window_radius, double w_norm2);

/// |h_e^dagger w|^2 for point `index` of the field.
double effective_eve_gain(const EavesdropperField& field, int index, const CVector& w);

/// Window sizing for the truncated PPP.
struct WindowPolicy {
    double base_radius = kDefaultWindowRadius;
    /// Colluding fields grow until the neglected tail SINR is below tolerance * gamma_ref.
    double tail_tolerance = 1e-6;
    /// Upper bound on the expected number of points; past it the tail enters as its mean.
    double max_expected_points = 2.0e3;
};

struct WindowChoice {
    double radius = kDefaultWindowRadius;
    double tail_path_gain = 0.0;
    bool capped = false;
};

/// Expected SINR contributed by PPP points beyond `radius` for a precoder column of squared
/// norm 1/K: 2 pi lambda R^(2-eta) / (sigma^2 K (eta - 2)).
double truncated_tail_sinr(const SystemConfig& cfg, double radius);

/// Picks the simulation window for cfg's collusion mode; gamma_ref is the legitimate SINR scale
/// the tail is compared against (usually the large-system gamma).
WindowChoice choose_window(const SystemConfig& cfg, double gamma_ref, const WindowPolicy& policy = {});

/// Field on window.radius carrying window.tail_path_gain.
EavesdropperField sample_eavesdropper_field(const SystemConfig& cfg, const SeedPlan& plan,
                                            const WindowChoice& window);

}  // namespace bcce

#endif
