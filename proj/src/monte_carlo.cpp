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

#include "bcce/monte_carlo.hpp"

#include <cmath>
#include <omp.h>

#include "bcce/analytics.hpp"
#include "bcce/error.hpp"
#include "bcce/precoder.hpp"
#include "bcce/rates.hpp"
#include "bcce/sinr.hpp"

namespace bcce {

namespace {

constexpr std::array<CollusionMode, kModeCount> kModes{CollusionMode::NonColluding, CollusionMode::Colluding,
                                                       CollusionMode::NearestOnly};

SeedPlan field_plan(const SystemConfig& cfg, std::uint64_t trial, std::uint64_t draw) {
    return {cfg.master_seed(), trial, StreamLabel::Field, draw};
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Ratio sum(num) / sum(den) with a standard error clustered on trials.
Estimate ratio_estimate(const std::vector<double>& num, const std::vector<double>& den) {
    Estimate e;
    double sn = 0.0, sd = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        sn += num[i];
        sd += den[i];
    }
    e.count = sd;
    if (sd <= 0.0) return e;
    e.mean = sn / sd;
    const double n = static_cast<double>(num.size());
    if (n < 2) return e;
    double ss = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        const double r = num[i] - e.mean * den[i];
        ss += r * r;
    }
    const double dbar = sd / n;
    e.std_error = std::sqrt(ss / (n * (n - 1.0))) / dbar;
    return e;
}

void fixed_link_one(const SystemConfig& cfg, const CVector& w_k, std::uint64_t trial, long i,
                    const WindowChoice& window, std::array<std::vector<double>, kModeCount>& out) {
    const EavesdropperField field =
        sample_eavesdropper_field(cfg, field_plan(cfg, trial, static_cast<std::uint64_t>(i)), window);
    CMatrix w(w_k.size(), 1);
    w.col(0) = w_k;
    const ExternalSinrAllModes all = external_sinr_all(field, w, cfg);
    for (CollusionMode m : kModes) out[mode_slot(m)][static_cast<std::size_t>(i)] = all[m][0];
}

}  // namespace

TrialSetup make_trial_setup(const SystemConfig& cfg, int fields_per_trial, const WindowPolicy& policy) {
    if (fields_per_trial < 1) throw ConfigError("fields per trial must be at least 1");
    TrialSetup s{cfg, fields_per_trial, {}};
    s.window = choose_window(cfg.with_mode(CollusionMode::Colluding), large_system_sinr(cfg).gamma, policy);
    return s;
}

TrialResult run_trial(const TrialSetup& setup, std::uint64_t trial_index) {
    const SystemConfig& cfg = setup.cfg;
    TrialResult r;
    r.trial_index = trial_index;
    const ChannelRealization h = sample_channel(cfg, {cfg.master_seed(), trial_index, StreamLabel::Channel, 0});
    const PrecodeResult w = build_rci(h, cfg);
    const RVector legit = legit_sinr(h, w, cfg);
    const RVector mal = malicious_sinr(h, w, cfg);
    const Eigen::Index k = legit.size();
    for (Eigen::Index i = 0; i < k; ++i) r.bcc_sum_rate += bcc_rate(legit[i], mal[i]);
    r.legit_mean = legit.mean();
    r.malicious_mean = mal.mean();

    for (int d = 0; d < setup.fields_per_trial; ++d) {
        const EavesdropperField field =
            sample_eavesdropper_field(cfg, field_plan(cfg, trial_index, static_cast<std::uint64_t>(d)), setup.window);
        const ExternalSinrAllModes all = external_sinr_all(field, w.w, cfg);
        for (CollusionMode m : kModes) {
            ModeTally& t = r.modes[mode_slot(m)];
            const RVector& ext = all[m];
            for (Eigen::Index i = 0; i < k; ++i) {
                t.rate_sum += bcce_rate(legit[i], mal[i], ext[i]);
                const int out = outage_indicator(legit[i], mal[i], ext[i]);
                t.outages += out;
                if (legit[i] > mal[i]) {
                    t.eligible += 1.0;
                    t.eligible_outages += out;
                }
                t.laplace_sum += std::exp(-ext[i]);
            }
        }
    }
    return r;
}

std::vector<TrialResult> run_trials_serial(const TrialSetup& setup, int n_trials) {
    if (n_trials < 1) throw ConfigError("trial count must be at least 1");
    std::vector<TrialResult> out(static_cast<std::size_t>(n_trials));
    for (int t = 0; t < n_trials; ++t) out[t] = run_trial(setup, static_cast<std::uint64_t>(t));
    return out;
}

std::vector<TrialResult> run_trials_parallel(const TrialSetup& setup, int n_trials, int workers) {
    if (n_trials < 1) throw ConfigError("trial count must be at least 1");
    std::vector<TrialResult> out(static_cast<std::size_t>(n_trials));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(workers))
    for (int t = 0; t < n_trials; ++t) out[t] = run_trial(setup, static_cast<std::uint64_t>(t));
    return out;
}

McSummary summarize(const std::vector<TrialResult>& trials, const TrialSetup& setup) {
    McSummary s;
    const std::size_t n = trials.size();
    s.trials = static_cast<double>(n);
    const double fields = setup.fields_per_trial;
    const double users = setup.cfg.n_users();
    std::vector<double> bcc(n), legit(n), mal(n);
    for (std::size_t t = 0; t < n; ++t) {
        bcc[t] = trials[t].bcc_sum_rate;
        legit[t] = trials[t].legit_mean;
        mal[t] = trials[t].malicious_mean;
    }
    s.bcc_sum_rate = mean_estimate(bcc);
    s.legit_sinr = mean_estimate(legit);
    s.malicious_sinr = mean_estimate(mal);
    for (CollusionMode m : kModes) {
        const std::size_t slot = mode_slot(m);
        std::vector<double> rate(n), user_rate(n), out(n), num(n), den(n);
        for (std::size_t t = 0; t < n; ++t) {
            const ModeTally& tally = trials[t].modes[slot];
            rate[t] = tally.rate_sum / fields;
            user_rate[t] = rate[t] / users;
            out[t] = tally.outages / (fields * users);
            num[t] = tally.eligible_outages;
            den[t] = tally.eligible;
        }
        ModeSummary& ms = s.modes[slot];
        ms.sum_rate = mean_estimate(rate);
        ms.per_user_rate = mean_estimate(user_rate);
        ms.outage = mean_estimate(out);
        ms.conditional_outage = ratio_estimate(num, den);
    }
    return s;
}

std::array<std::vector<double>, kModeCount> fixed_link_eve_sinr_serial(const SystemConfig& cfg, const CVector& w_k,
                                                                      std::uint64_t trial_index, long n_fields,
                                                                      const WindowChoice& window) {
    std::array<std::vector<double>, kModeCount> out;
    for (auto& v : out) v.assign(static_cast<std::size_t>(n_fields), 0.0);
    for (long i = 0; i < n_fields; ++i) fixed_link_one(cfg, w_k, trial_index, i, window, out);
    return out;
}

std::array<std::vector<double>, kModeCount> fixed_link_eve_sinr_parallel(const SystemConfig& cfg,
                                                                        const CVector& w_k,
                                                                        std::uint64_t trial_index, long n_fields,
                                                                        const WindowChoice& window, int workers) {
    std::array<std::vector<double>, kModeCount> out;
    for (auto& v : out) v.assign(static_cast<std::size_t>(n_fields), 0.0);
#pragma omp parallel for schedule(static, 64) num_threads(thread_count(workers))
    for (long i = 0; i < n_fields; ++i) fixed_link_one(cfg, w_k, trial_index, i, window, out);
    return out;
}

std::vector<double> projected_eve_sinr(const SystemConfig& cfg, CollusionMode mode, double w_norm2,
                                       std::uint64_t trial_index, long n_fields, const WindowChoice& window,
                                       int workers) {
    std::vector<double> out(static_cast<std::size_t>(n_fields));
#pragma omp parallel for schedule(static, 64) num_threads(thread_count(workers))
    for (long i = 0; i < n_fields; ++i) {
        ProjectedField f = sample_projected_field(cfg, field_plan(cfg, trial_index, static_cast<std::uint64_t>(i)),
                                                  window.radius, w_norm2);
        f.tail_path_gain = window.tail_path_gain;
        out[static_cast<std::size_t>(i)] = external_sinr(f, cfg, mode);
    }
    return out;
}

Estimate mean_estimate(const std::vector<double>& samples) {
    Estimate e;
    const double n = static_cast<double>(samples.size());
    e.count = n;
    if (samples.empty()) return e;
    double mean = 0.0, m2 = 0.0;
    long i = 0;
    for (double x : samples) {
        ++i;
        const double delta = x - mean;
        mean += delta / static_cast<double>(i);
        m2 += delta * (x - mean);
    }
    e.mean = mean;
    if (n > 1) e.std_error = std::sqrt(m2 / (n - 1.0) / n);
    return e;
}

Estimate exceedance_estimate(const std::vector<double>& samples, double threshold) {
    Estimate e;
    e.count = static_cast<double>(samples.size());
    if (samples.empty()) return e;
    double hits = 0.0;
    for (double x : samples) hits += x >= threshold ? 1.0 : 0.0;
    e.mean = hits / e.count;
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / e.count);
    return e;
}

}  // namespace bcce
