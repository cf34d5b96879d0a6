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

#include <random>

#include "bcce/config.hpp"
#include "bcce/error.hpp"

using namespace bcce;

TEST_CASE("load and snr given in dB") {
    RawConfig r;
    r.n_antennas = 10;
    r.network_load = 1.0;
    r.snr_db = 10.0;
    const SystemConfig c = validate_config(r);
    CHECK(c.n_users() == 10);
    CHECK(c.snr_linear() == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(c.noise_power() == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("minimal system") {
    RawConfig r;
    r.n_antennas = 1;
    r.n_users = 1;
    r.snr_linear = 1.0;
    r.path_loss_exponent = 4.0;
    r.eavesdropper_density = 0.0;
    r.regularization = 1.0;
    const SystemConfig c = validate_config(r);
    CHECK(c.n_antennas() == 1);
    CHECK(c.network_load() == 1.0);
    CHECK(c.eta_is_four());
    CHECK(c.closed_forms().colluding);
}

TEST_CASE("rejected inputs") {
    RawConfig base;
    base.n_antennas = 10;
    base.network_load = 1.0;
    base.snr_db = 10.0;

    auto with = [&](auto edit) {
        RawConfig r = base;
        edit(r);
        return r;
    };
    CHECK_THROWS_WITH_AS(validate_config(with([](RawConfig& r) { r.path_loss_exponent = 2.0; })),
                         "path-loss exponent must exceed 2", ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) { r.regularization = 0.0; })), ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) { r.regularization = -1.0; })), ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) { r.eavesdropper_density = -0.1; })), ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) { r.n_antennas = 0; })), ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) {
                        r.network_load.reset();
                        r.n_users = 0;
                    })),
                    ConfigError);
    CHECK_THROWS_AS(validate_config(with([](RawConfig& r) { r.network_load = 0.01; })), ConfigError);
}

TEST_CASE("closed-form availability follows eta") {
    RawConfig r;
    r.n_antennas = 4;
    r.n_users = 4;
    r.snr_db = 0.0;
    r.path_loss_exponent = 3.5;
    const ClosedFormSupport s = validate_config(r).closed_forms();
    CHECK(s.noncolluding);
    CHECK_FALSE(s.colluding);
    CHECK_FALSE(s.nearest);
}

TEST_CASE("K wins over beta and beta is stored as K/N") {
    RawConfig r;
    r.n_antennas = 10;
    r.n_users = 7;
    r.network_load = 0.2;
    r.snr_db = 0.0;
    const SystemConfig c = validate_config(r);
    CHECK(c.n_users() == 7);
    CHECK(std::abs(c.network_load() - 0.7) < 1e-12);
}

TEST_CASE("serialize round trip over random configurations") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> n_dist(1, 300);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        RawConfig r;
        r.n_antennas = n_dist(rng);
        r.n_users = std::uniform_int_distribution<long>(1, 2 * *r.n_antennas)(rng);
        r.snr_db = -20.0 + 60.0 * u(rng);
        r.path_loss_exponent = 2.0 + 1e-9 + 4.0 * u(rng);
        r.eavesdropper_density = i % 7 == 0 ? 0.0 : std::pow(10.0, -4.0 + 6.0 * u(rng));
        r.regularization = std::pow(10.0, -5.0 + 6.0 * u(rng));
        r.collusion_mode = static_cast<CollusionMode>(i % 3);
        r.seed = rng();
        const SystemConfig c = validate_config(r);
        const SystemConfig back = validate_config(parse_config_text(serialize_config(c)));
        REQUIRE(back == c);
        CHECK(validate_config(c.to_raw()) == c);
        CHECK(c.snr_linear() * c.noise_power() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(c.network_load() * c.n_antennas() - c.n_users()) < 1e-12 * c.n_antennas());
    }
}

TEST_CASE("config text format") {
    const RawConfig r = parse_config_text(
        "# comment\n"
        "n_antennas = 12\n"
        "network_load: 0.5   # trailing\n"
        "snr_db = 5\n"
        "collusion_mode = colluding\n"
        "seed = 9\n");
    const SystemConfig c = validate_config(r);
    CHECK(c.n_antennas() == 12);
    CHECK(c.n_users() == 6);
    CHECK(c.collusion_mode() == CollusionMode::Colluding);
    CHECK(c.master_seed() == 9u);
    CHECK_THROWS_AS(parse_config_text("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n_antennas = ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n_antennas\n"), ConfigError);
}

TEST_CASE("flag overrides apply after file values") {
    RawConfig file = parse_config_text("n_antennas = 12\nnetwork_load = 1\nsnr_linear = 3\n");
    RawConfig flags;
    flags.snr_db = 10.0;
    file.merge(flags);
    const SystemConfig c = validate_config(file);
    CHECK(c.snr_linear() == doctest::Approx(10.0));
}

TEST_CASE("collusion mode names") {
    for (CollusionMode m : {CollusionMode::NonColluding, CollusionMode::Colluding, CollusionMode::NearestOnly}) {
        CHECK(parse_collusion_mode(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_collusion_mode("partial"), ConfigError);
}
