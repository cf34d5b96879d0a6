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
#include "bcce/asymptotics.hpp"
#include "bcce/precoder.hpp"
#include "bcce/sampling.hpp"
#include "bcce/sinr.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bcce;

TEST_CASE("g solves its quadratic") {
    for (double beta : {0.2, 0.5, 1.0, 1.7})
        for (double xi : {1e-4, 0.0273, 0.5, 10.0}) {
            const double g = g_function(beta, xi);
            CHECK(g >= 0.0);
            CHECK(g == doctest::Approx(1.0 / (xi + beta / (1.0 + g))).epsilon(1e-12));
        }
}

TEST_CASE("reference operating point") {
    const AsymptoticInputs in{1.0, 10.0, 0.0273};
    CHECK(g_function(1.0, 0.0273) == doctest::Approx(5.572894).epsilon(1e-6));
    const LargeSystemSinr s = gamma_ls(in);
    CHECK(s.gamma == doctest::Approx(2.282917).epsilon(1e-6));
    CHECK(s.gamma_m == doctest::Approx(0.231466).epsilon(1e-5));
    CHECK(r_bcc_ls(in) == doctest::Approx(1.414602).epsilon(1e-6));
}

TEST_CASE("closed-form optimum agrees with a dense grid search") {
    for (double beta : {0.4, 0.8, 1.0})
        for (double rho : {1.0, 10.0, 100.0}) {
            const double closed = xi_bcc_opt(beta, rho);
            auto f = [&](double xi) { return r_bcc_ls({beta, rho, xi}); };
            const std::vector<double> grid = oracle::log_grid(1e-5, 10.0, 20001);
            const int i = oracle::grid_argmax(f, grid);
            REQUIRE(i > 0);
            REQUIRE(i < 20000);
            CHECK(closed >= grid[i - 1]);
            CHECK(closed <= grid[i + 1]);
            // Stationary: central difference of the objective vanishes relative to its scale.
            const double h = 1e-5 * closed;
            CHECK(std::abs(f(closed + h) - f(closed - h)) / (2 * h) < 1e-4 * f(closed) / closed);
        }
    CHECK(std::abs(xi_bcc_opt(1.0, 10.0) - 0.0273) < 5e-4);
    CHECK(xi_bc_opt(1.0, 10.0) == 0.1);
}

TEST_CASE("secrecy rate is positive across the low-load, moderate-SNR region") {
    for (double beta : {0.1, 0.3, 0.6, 1.0})
        for (double rho_db : {-10.0, 0.0, 10.0, 20.0, 30.0}) {
            const double rho = std::pow(10.0, rho_db / 10.0);
            CHECK(r_bcc_ls({beta, rho, xi_bcc_opt(beta, rho)}) > 0.0);
        }
}

TEST_CASE("finite-size SINRs converge to the deterministic equivalents") {
    // The relative error of the sample mean should fall as N grows.
    double prev = 1e9;
    for (int n : {10, 20, 40}) {
        const SystemConfig cfg = make_cfg(n, 1.0, 10.0, 0.0, 0.0273);
        const LargeSystemSinr ls = large_system_sinr(cfg);
        std::vector<double> legit;
        for (std::uint64_t t = 0; t < 400; ++t) {
            const ChannelRealization h = sample_channel(cfg, {17, t, StreamLabel::Channel, 0});
            const RVector s = legit_sinr(h, build_rci(h, cfg), cfg);
            for (int k = 0; k < s.size(); ++k) legit.push_back(s[k]);
        }
        const double err = std::abs(oracle::mean(legit) / ls.gamma - 1.0);
        MESSAGE("N=" << n << " relative error " << err);
        CHECK(err < 0.12);
        CHECK(err < prev + 0.01);
        prev = err;
    }
}
