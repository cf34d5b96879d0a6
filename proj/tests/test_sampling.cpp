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
#include <numbers>

#include "bcce/sampling.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bcce;

TEST_CASE("channel entries have unit mean power") {
    const SystemConfig cfg = make_cfg(4, 1.0, 10.0);
    double sum = 0.0, sum_re = 0.0;
    long count = 0;
    for (std::uint64_t t = 0; t < 6250; ++t) {
        const ChannelRealization c = sample_channel(cfg, {7, t, StreamLabel::Channel, 0});
        sum += c.h.cwiseAbs2().sum();
        sum_re += c.h.real().sum();
        count += c.h.size();
    }
    REQUIRE(count == 100000);
    const double mean_power = sum / count;
    CHECK(mean_power >= 0.99);
    CHECK(mean_power <= 1.01);
    CHECK(std::abs(sum_re / count) < 0.01);
}

TEST_CASE("same plan gives the same draw, different plans do not") {
    const SystemConfig cfg = make_cfg(6, 0.5, 0.0, 0.3);
    const SeedPlan plan{11, 3, StreamLabel::Channel, 0};
    CHECK(sample_channel(cfg, plan).h == sample_channel(cfg, plan).h);
    CHECK(sample_channel(cfg, plan).h != sample_channel(cfg, {11, 4, StreamLabel::Channel, 0}).h);
    CHECK(sample_channel(cfg, plan).h != sample_channel(cfg, {12, 3, StreamLabel::Channel, 0}).h);

    const SeedPlan fp{11, 3, StreamLabel::Field, 2};
    const EavesdropperField a = sample_eavesdropper_field(cfg, fp, 10.0);
    const EavesdropperField b = sample_eavesdropper_field(cfg, fp, 10.0);
    CHECK(a.distances == b.distances);
    CHECK(a.channels == b.channels);
    const EavesdropperField c = sample_eavesdropper_field(cfg, {11, 3, StreamLabel::Field, 5}, 10.0);
    CHECK(a.distances != c.distances);
}

TEST_CASE("point count is Poisson with mean lambda pi R^2") {
    const SystemConfig cfg = make_cfg(1, 1.0, 0.0, 0.2);
    const double radius = 10.0;
    const double expected = 0.2 * std::numbers::pi * radius * radius;
    std::vector<double> counts;
    for (std::uint64_t t = 0; t < 10000; ++t)
        counts.push_back(sample_projected_field(cfg, {3, t, StreamLabel::Field, 0}, radius, 1.0).size());
    const double m = oracle::mean(counts);
    CHECK(std::abs(m / expected - 1.0) < 0.02);
    double var = 0.0;
    for (double c : counts) var += (c - m) * (c - m);
    var /= counts.size() - 1.0;
    CHECK(std::abs(var / expected - 1.0) < 0.05);
}

TEST_CASE("nearest distance follows 1 - exp(-lambda pi x^2)") {
    const double lambda_e = 0.1;
    const SystemConfig cfg = make_cfg(1, 1.0, 0.0, lambda_e);
    std::vector<double> nearest;
    for (std::uint64_t t = 0; t < 20000; ++t) {
        const ProjectedField f = sample_projected_field(cfg, {5, t, StreamLabel::Field, 0}, 30.0, 1.0);
        if (f.size() > 0) nearest.push_back(f.distances.minCoeff());
    }
    const double d = oracle::ks_statistic(
        nearest, [&](double x) { return 1.0 - std::exp(-lambda_e * std::numbers::pi * x * x); });
    CHECK(d < 0.02);
}

TEST_CASE("distances are uniform over the disc area") {
    const SystemConfig cfg = make_cfg(1, 1.0, 0.0, 1.0);
    const double radius = 5.0;
    std::vector<double> all;
    for (std::uint64_t t = 0; t < 100; ++t) {
        const ProjectedField f = sample_projected_field(cfg, {9, t, StreamLabel::Field, 0}, radius, 1.0);
        for (int i = 0; i < f.size(); ++i) all.push_back(f.distances[i]);
    }
    CHECK(oracle::ks_statistic(all, [&](double x) { return x * x / (radius * radius); }) < 0.01);
}

TEST_CASE("projected gain of a fixed precoder column is exponential") {
    const int n = 8;
    const SystemConfig cfg = make_cfg(n, 1.0, 10.0, 2.0);
    const double k = n;
    // Two orthogonal directions of norm 1/sqrt(K): the law must not depend on direction.
    CVector w1 = CVector::Zero(n);
    w1[0] = 1.0 / std::sqrt(k);
    CVector w2 = CVector::Constant(n, std::complex<double>(0.0, 1.0) / std::sqrt(k * n));
    w2[0] = 0.0;
    w2 *= std::sqrt(static_cast<double>(n) / (n - 1));
    std::vector<double> g1, g2;
    for (std::uint64_t t = 0; t < 12 && g1.size() < 50000; ++t) {
        const EavesdropperField f = sample_eavesdropper_field(cfg, {21, t, StreamLabel::Field, 0}, 30.0);
        for (int e = 0; e < f.size(); ++e) {
            g1.push_back(effective_eve_gain(f, e, w1));
            g2.push_back(effective_eve_gain(f, e, w2));
        }
    }
    REQUIRE(g1.size() >= 50000);
    auto cdf = [&](double x) { return 1.0 - std::exp(-k * x); };
    CHECK(oracle::ks_statistic(g1, cdf) < 0.01);
    CHECK(oracle::ks_statistic(g2, cdf) < 0.01);
    CHECK(std::abs(oracle::mean(g1) * k - 1.0) < 0.02);
    CHECK(std::abs(oracle::mean(g2) * k - 1.0) < 0.02);

    std::vector<double> p;
    for (std::uint64_t t = 0; t < 4; ++t) {
        const ProjectedField f = sample_projected_field(cfg, {21, t, StreamLabel::Field, 0}, 30.0, 1.0 / k);
        for (int e = 0; e < f.size(); ++e) p.push_back(f.gains[e]);
    }
    CHECK(oracle::ks_statistic(p, cdf) < 0.01);
}

TEST_CASE("tail of the truncated colluding sum") {
    const SystemConfig cfg = make_cfg(10, 1.0, 10.0, 0.1).with_mode(CollusionMode::Colluding);
    // 2 pi lambda R^{2-eta} / (sigma^2 K (eta - 2)) at eta = 4.
    const double r = 30.0;
    CHECK(truncated_tail_sinr(cfg, r) == doctest::Approx(2.0 * std::numbers::pi * 0.1 / (r * r) / (0.1 * 10 * 2)));

    const WindowChoice nc = choose_window(cfg.with_mode(CollusionMode::NonColluding), 2.28);
    CHECK(nc.radius == kDefaultWindowRadius);
    CHECK_FALSE(nc.capped);

    const WindowChoice wide = choose_window(cfg.with_density(1e-3), 2.28);
    CHECK_FALSE(wide.capped);
    CHECK(truncated_tail_sinr(cfg.with_density(1e-3), wide.radius) <= 1e-6 * 2.28 * (1 + 1e-12));

    const WindowChoice capped = choose_window(cfg, 2.28);
    CHECK(capped.capped);
    CHECK(0.1 * std::numbers::pi * capped.radius * capped.radius == doctest::Approx(2.0e3));
    CHECK(capped.tail_path_gain * cfg.snr_linear() / cfg.n_users() ==
          doctest::Approx(truncated_tail_sinr(cfg, capped.radius)));
}

TEST_CASE("empty field when the density is zero") {
    const SystemConfig cfg = make_cfg(4, 1.0, 0.0, 0.0);
    const EavesdropperField f = sample_eavesdropper_field(cfg, {1, 0, StreamLabel::Field, 0}, 30.0);
    CHECK(f.empty());
    CHECK(f.channels.rows() == 4);
    CHECK_THROWS(sample_eavesdropper_field(cfg, {1, 0, StreamLabel::Field, 0}, 0.0));
}
