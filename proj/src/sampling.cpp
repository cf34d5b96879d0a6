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

#include "bcce/sampling.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bcce/error.hpp"

namespace bcce {

namespace {

// Real and imaginary parts each N(0, 1/2).
template <typename Derived>
void fill_complex_gaussian(Eigen::MatrixBase<Derived>& m, Engine& rng) {
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = std::complex<double>(re, im);
        }
    }
}

RVector sample_disc_distances(double lambda_e, double radius, Engine& rng) {
    const double mean_count = lambda_e * std::numbers::pi * radius * radius;
    if (mean_count <= 0.0) return RVector(0);
    std::poisson_distribution<long> count_dist(mean_count);
    const long count = count_dist(rng);
    RVector d(count);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (long i = 0; i < count; ++i) {
        // Radius of a uniform point in the disc; 1 - U keeps the value in (0, 1].
        d[i] = radius * std::sqrt(1.0 - unif(rng));
    }
    return d;
}

}  // namespace

ChannelRealization sample_channel(const SystemConfig& cfg, const SeedPlan& plan) {
    const SeedPlan p = plan.relabel(StreamLabel::Channel);
    Engine rng = make_engine(p);
    ChannelRealization out;
    out.h.resize(cfg.n_users(), cfg.n_antennas());
    fill_complex_gaussian(out.h, rng);
    out.seed_trace = p;
    return out;
}

EavesdropperField sample_eavesdropper_field(const SystemConfig& cfg, const SeedPlan& plan,
                                            double window_radius) {
    if (!(window_radius > 0.0)) throw ConfigError("window radius must be positive");
    EavesdropperField field;
    field.window_radius = window_radius;
    Engine pos_rng = make_engine(plan.relabel(StreamLabel::Field));
    field.distances = sample_disc_distances(cfg.eavesdropper_density(), window_radius, pos_rng);
    field.channels.resize(cfg.n_antennas(), field.distances.size());
    Engine fade_rng = make_engine(plan.relabel(StreamLabel::EveChannel));
    fill_complex_gaussian(field.channels, fade_rng);
    return field;
}

EavesdropperField sample_eavesdropper_field(const SystemConfig& cfg, const SeedPlan& plan,
                                            const WindowChoice& window) {
    EavesdropperField field = sample_eavesdropper_field(cfg, plan, window.radius);
    field.tail_path_gain = window.tail_path_gain;
    return field;
}

ProjectedField sample_projected_field(const SystemConfig& cfg, const SeedPlan& plan,
                                      double window_radius, double w_norm2) {
    if (!(window_radius > 0.0)) throw ConfigError("window radius must be positive");
    ProjectedField field;
    field.window_radius = window_radius;
    field.w_norm2 = w_norm2;
    Engine pos_rng = make_engine(plan.relabel(StreamLabel::Field));
    field.distances = sample_disc_distances(cfg.eavesdropper_density(), window_radius, pos_rng);
    field.gains.resize(field.distances.size());
    Engine fade_rng = make_engine(plan.relabel(StreamLabel::EveChannel));
    std::exponential_distribution<double> expo(1.0);
    for (Eigen::Index i = 0; i < field.gains.size(); ++i) field.gains[i] = w_norm2 * expo(fade_rng);
    return field;
}

double effective_eve_gain(const EavesdropperField& field, int index, const CVector& w) {
    // Eigen's dot() conjugates the left operand: h_e^dagger w.
    return std::norm(field.channels.col(index).dot(w));
}

double truncated_tail_sinr(const SystemConfig& cfg, double radius) {
    const double eta = cfg.path_loss_exponent();
    return 2.0 * std::numbers::pi * cfg.eavesdropper_density() * std::pow(radius, 2.0 - eta) /
           (cfg.noise_power() * cfg.n_users() * (eta - 2.0));
}

WindowChoice choose_window(const SystemConfig& cfg, double gamma_ref, const WindowPolicy& policy) {
    WindowChoice choice;
    choice.radius = policy.base_radius;
    const double lambda_e = cfg.eavesdropper_density();
    if (cfg.collusion_mode() != CollusionMode::Colluding || lambda_e <= 0.0) return choice;

    const double eta = cfg.path_loss_exponent();
    const double budget = policy.tail_tolerance * gamma_ref;
    // Solve truncated_tail_sinr(R) = budget for R.
    const double unit_tail = truncated_tail_sinr(cfg, 1.0);
    const double needed = std::pow(unit_tail / budget, 1.0 / (eta - 2.0));
    choice.radius = std::max(choice.radius, needed);

    const double cap = std::sqrt(policy.max_expected_points / (std::numbers::pi * lambda_e));
    if (choice.radius > cap) {
        choice.radius = std::max(cap, policy.base_radius);
        choice.capped = choice.radius < needed;
    }
    if (choice.capped) {
        choice.tail_path_gain =
            2.0 * std::numbers::pi * lambda_e * std::pow(choice.radius, 2.0 - eta) / (eta - 2.0);
    }
    return choice;
}

}  // namespace bcce
