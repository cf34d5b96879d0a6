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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "bcce/analytics.hpp"
#include "bcce/asymptotics.hpp"
#include "bcce/optimizer.hpp"
#include "bcce/sampling.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bcce;

TEST_CASE("scan and golden refinement on synthetic objectives") {
    auto smooth = [](double xi) { return -std::pow(std::log(xi / 0.3), 2); };
    const OptimizeResult r = maximize_scan_golden(smooth);
    CHECK(r.converged);
    CHECK(r.flags == 0u);
    CHECK(std::abs(r.xi_star / 0.3 - 1.0) < 2e-4);
    CHECK(r.bracket_lo <= r.xi_star);
    CHECK(r.xi_star <= r.bracket_hi);

    const double inf = std::numeric_limits<double>::infinity();
    auto boxed = [&](double xi) { return xi < 0.01 || xi > 1.0 ? -inf : -std::pow(std::log(xi / 0.05), 2); };
    CHECK(std::abs(maximize_scan_golden(boxed).xi_star / 0.05 - 1.0) < 2e-4);

    auto at_edge = [](double xi) { return -xi; };
    CHECK(maximize_scan_golden(at_edge).xi_star == doctest::Approx(1e-5));
}

TEST_CASE("diagnostic flags") {
    const OptimizeResult flat = maximize_scan_golden([](double) { return 2.5; });
    CHECK(flat.has(kFlatObjective));
    const OptimizeResult zero = maximize_scan_golden([](double) { return 0.0; });
    CHECK(zero.has(kDegenerateObjective));
    const OptimizeResult none = maximize_scan_golden([](double) { return -std::numeric_limits<double>::infinity(); });
    CHECK(none.has(kDegenerateObjective));

    auto two_peaks = [](double xi) {
        const double t = std::log10(xi);
        return std::exp(-std::pow(t + 3.0, 2) * 8.0) + 0.9 * std::exp(-std::pow(t - 0.0, 2) * 8.0);
    };
    const OptimizeResult bimodal = maximize_scan_golden(two_peaks);
    CHECK(bimodal.has(kMultipleMaxima));
    CHECK_FALSE(bimodal.converged);
    CHECK(std::abs(std::log10(bimodal.xi_star) + 3.0) < 1e-3);

    // A spike narrower than the grid spacing is only found through the extra point.
    auto spike = [](double xi) { return std::abs(xi - 0.0123) < 1e-7 ? 10.0 : -std::pow(std::log(xi), 2); };
    const double extra[] = {0.0123};
    const OptimizeResult won = maximize_scan_golden(spike, {}, extra);
    CHECK(won.has(kExtraCandidateWon));
    CHECK(won.xi_star == 0.0123);
    CHECK(won.bracket_lo <= 0.0123);
    CHECK(won.bracket_hi >= 0.0123);
}

TEST_CASE("large-system optimum against a 4096-point grid") {
    const std::vector<double> grid = oracle::log_grid(1e-5, 10.0, 4096);
    const double step = std::log(grid[1] / grid[0]);
    for (CollusionMode mode : {CollusionMode::NonColluding, CollusionMode::Colluding})
        for (double lambda_e : {0.01, 0.1, 1.0}) {
            const SystemConfig cfg = make_cfg(10, 1.0, 10.0, lambda_e);
            auto f = [&](double xi) { return mean_secrecy_rate_ls(cfg.with_regularization(xi), mode); };
            const int i = oracle::grid_argmax(f, grid);
            const OptimizeResult r = xi_bcce_opt(cfg, mode);
            CHECK(r.converged);
            CHECK(std::abs(std::log(r.xi_star / grid[i])) <= step);
            CHECK(std::exp(r.objective_at_star) >= f(grid[i]) * (1 - 1e-9));
        }
}

TEST_CASE("limits in the eavesdropper density") {
    const SystemConfig cfg = make_cfg(10, 1.0, 10.0, 0.0);
    const double xi_bcc = xi_bcc_opt(1.0, 10.0);
    for (CollusionMode mode : {CollusionMode::NonColluding, CollusionMode::Colluding}) {
        CHECK(std::abs(xi_bcce_opt(cfg.with_density(1e-3), mode).xi_star / xi_bcc - 1.0) < 0.05);
        CHECK(std::abs(xi_bcce_opt(cfg.with_density(1e3), mode).xi_star / xi_bc_opt(1.0, 10.0) - 1.0) < 0.05);
        const OptimizeResult clean = xi_bcce_opt(cfg, mode);
        CHECK(std::abs(clean.xi_star / xi_bcc - 1.0) < 1e-3);
        // More eavesdroppers push the optimum up towards beta / rho.
        double prev = 0.0;
        for (double lambda_e : {1e-3, 0.1, 1.0, 10.0}) {
            const double xi = xi_bcce_opt(cfg.with_density(lambda_e), mode).xi_star;
            CHECK(xi > prev);
            prev = xi;
        }
    }
}

TEST_CASE("single-user channel has a flat realized objective") {
    const SystemConfig cfg = make_cfg(4, 0.25, 10.0, 0.1);
    REQUIRE(cfg.n_users() == 1);
    const ChannelRealization h = sample_channel(cfg, {2, 0, StreamLabel::Channel, 0});
    const EavesdropperField f = sample_eavesdropper_field(cfg, {2, 0, StreamLabel::Field, 0}, 30.0);
    const OptimizeResult r = xi_star_realization(h, f, cfg);
    CHECK(r.has(kFlatObjective));
}

TEST_CASE("per-realization optimum is never worse than the large-system choice") {
    const SystemConfig cfg = make_cfg(10, 1.0, 10.0, 0.1).with_mode(CollusionMode::Colluding);
    const double xi_ls = xi_bcce_opt(cfg, CollusionMode::Colluding).xi_star;
    const WindowChoice win = choose_window(cfg, large_system_sinr(cfg).gamma);
    for (std::uint64_t t = 0; t < 20; ++t) {
        const ChannelRealization h = sample_channel(cfg, {5, t, StreamLabel::Channel, 0});
        const EavesdropperField f = sample_eavesdropper_field(cfg, {5, t, StreamLabel::Field, 0}, win);
        const ExternalSinrEvaluator eve(f, cfg, CollusionMode::Colluding);
        const double extra[] = {xi_ls};
        const OptimizeResult r = xi_star_realization(h, eve, cfg, extra);
        CHECK(realized_sum_rate(h, eve, cfg, r.xi_star) >= realized_sum_rate(h, eve, cfg, xi_ls));
        CHECK(r.objective_at_star == doctest::Approx(realized_sum_rate(h, eve, cfg, r.xi_star)));
    }
}

TEST_CASE("finite-size average optimum is reproducible") {
    const SystemConfig cfg = make_cfg(6, 1.0, 10.0, 0.1, 0.0273, 4.0, 77);
    XiBarOptions opts;
    opts.fields_per_trial = 2;
    const OptimizeResult a = xi_bar_finite(cfg, 30, opts);
    const OptimizeResult b = xi_bar_finite(cfg, 30, opts);
    CHECK(a.xi_star == b.xi_star);
    CHECK(a.objective_at_star == b.objective_at_star);
    CHECK(a.xi_star > 1e-5);
    CHECK(a.xi_star < 10.0);
    // Truncated candidate lists must not change the answer.
    XiBarOptions full = opts;
    full.max_cached_points = 0;
    const OptimizeResult c = xi_bar_finite(cfg, 30, full);
    CHECK(c.xi_star == doctest::Approx(a.xi_star).epsilon(1e-12));
    CHECK(xi_bar_finite(cfg.with_seed(78), 30, opts).xi_star != a.xi_star);
}
