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

#include "bcce/analytics.hpp"
#include "bcce/monte_carlo.hpp"
#include "bcce/precoder.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bcce;

TEST_CASE("parallel trials are bit-identical to the serial loop") {
    const SystemConfig cfg = make_cfg(8, 1.0, 10.0, 0.1, 0.0273, 4.0, 123);
    const TrialSetup setup = make_trial_setup(cfg, 3);
    const std::vector<TrialResult> serial = run_trials_serial(setup, 24);
    for (int workers : {0, 1, 2, 3, 8}) {
        const std::vector<TrialResult> par = run_trials_parallel(setup, 24, workers);
        REQUIRE(par.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) CHECK(par[i] == serial[i]);
    }
    CHECK(run_trial(setup, 5) == serial[5]);
    CHECK(serial[5].trial_index == 5u);
}

TEST_CASE("fixed-link kernels agree serial and parallel") {
    const SystemConfig cfg = make_cfg(6, 1.0, 10.0, 0.2, 0.0273, 4.0, 9);
    const CVector w = CVector::Constant(6, 1.0 / 6.0);
    const WindowChoice win{15.0, 0.0, false};
    const auto serial = fixed_link_eve_sinr_serial(cfg, w, 3, 200, win);
    for (int workers : {1, 2, 5}) {
        const auto par = fixed_link_eve_sinr_parallel(cfg, w, 3, 200, win, workers);
        for (int m = 0; m < kModeCount; ++m) CHECK(par[m] == serial[m]);
    }
    const std::vector<double> p1 = projected_eve_sinr(cfg, CollusionMode::Colluding, 1.0 / 6.0, 3, 300, win, 1);
    const std::vector<double> p3 = projected_eve_sinr(cfg, CollusionMode::Colluding, 1.0 / 6.0, 3, 300, win, 3);
    CHECK(p1 == p3);
}

TEST_CASE("tallies are consistent") {
    const SystemConfig cfg = make_cfg(6, 1.0, 10.0, 0.1, 0.0273, 4.0, 4);
    const TrialSetup setup = make_trial_setup(cfg, 4);
    const std::vector<TrialResult> trials = run_trials_serial(setup, 40);
    for (const TrialResult& t : trials) {
        const ModeTally& nc = t.modes[mode_slot(CollusionMode::NonColluding)];
        const ModeTally& c = t.modes[mode_slot(CollusionMode::Colluding)];
        const ModeTally& n = t.modes[mode_slot(CollusionMode::NearestOnly)];
        // Stronger eavesdroppers, more outages and lower rates.
        CHECK(n.rate_sum >= nc.rate_sum - 1e-12);
        CHECK(nc.rate_sum >= c.rate_sum - 1e-12);
        CHECK(c.outages >= nc.outages);
        CHECK(nc.outages >= n.outages);
        CHECK(nc.eligible == c.eligible);
        CHECK(nc.eligible_outages <= nc.eligible);
        CHECK(nc.outages - nc.eligible_outages == doctest::Approx(4 * 6 - nc.eligible));
        CHECK(nc.rate_sum <= 4 * t.bcc_sum_rate + 1e-12);
    }
    const McSummary s = summarize(trials, setup);
    CHECK(s.trials == 40.0);
    const ModeSummary& nc = s.modes[mode_slot(CollusionMode::NonColluding)];
    CHECK(nc.per_user_rate.mean == doctest::Approx(nc.sum_rate.mean / 6.0));
    CHECK(nc.outage.mean >= 0.0);
    CHECK(nc.outage.mean <= 1.0);
    CHECK(nc.sum_rate.std_error > 0.0);
}

TEST_CASE("zero density gives no external outages") {
    const SystemConfig cfg = make_cfg(6, 1.0, 10.0, 0.0);
    const TrialSetup setup = make_trial_setup(cfg, 2);
    const McSummary s = summarize(run_trials_serial(setup, 20), setup);
    for (int m = 0; m < kModeCount; ++m) {
        CHECK(s.modes[m].conditional_outage.mean == 0.0);
        CHECK(s.modes[m].sum_rate.mean == doctest::Approx(s.bcc_sum_rate.mean).epsilon(1e-14));
    }
}

TEST_CASE("estimators") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const Estimate m = mean_estimate(v);
    CHECK(m.mean == doctest::Approx(2.5));
    CHECK(m.std_error == doctest::Approx(oracle::std_error(v)));
    CHECK(m.count == 4.0);
    const Estimate e = exceedance_estimate(v, 3.0);
    CHECK(e.mean == doctest::Approx(0.5));
    CHECK(e.std_error == doctest::Approx(0.25));
}

TEST_CASE("projected sampler reproduces the closed-form outage") {
    const SystemConfig cfg = make_cfg(10, 1.0, 10.0, 0.1);
    const WindowChoice win{30.0, 0.0, false};
    const std::vector<double> y = projected_eve_sinr(cfg, CollusionMode::NonColluding, 0.1, 1, 20000, win);
    const Estimate e = exceedance_estimate(y, 2.284);
    CHECK(std::abs(e.mean - outage_noncolluding(2.284, 0.2, cfg)) < 4.0 * e.std_error);
}
