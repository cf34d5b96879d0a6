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

#ifndef BCCE_MONTE_CARLO_HPP
#define BCCE_MONTE_CARLO_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "bcce/config.hpp"
#include "bcce/sampling.hpp"
#include "bcce/types.hpp"

namespace bcce {

inline constexpr int kModeCount = 3;
inline constexpr std::size_t mode_slot(CollusionMode m) { return static_cast<std::size_t>(m); }

struct TrialSetup {
    SystemConfig cfg;
    int fields_per_trial = 16;
    /// Shared by all modes; sized for the colluding tail.
    WindowChoice window{};
};

TrialSetup make_trial_setup(const SystemConfig& cfg, int fields_per_trial, const WindowPolicy& policy = {});

struct ModeTally {
    double rate_sum = 0.0;     ///< sum over fields of the secrecy sum rate S
    double outages = 0.0;      ///< user-field pairs with R_k = 0
    double eligible = 0.0;     ///< user-field pairs with gamma_k > gamma_M,k
    double eligible_outages = 0.0;
    double laplace_sum = 0.0;  ///< sum over user-field pairs of exp(-gamma_E)

    bool operator==(const ModeTally&) const = default;
};

struct TrialResult {
    std::uint64_t trial_index = 0;
    double bcc_sum_rate = 0.0;
    double legit_mean = 0.0;      ///< gamma_k averaged over users
    double malicious_mean = 0.0;  ///< gamma_M,k averaged over users
    std::array<ModeTally, kModeCount> modes{};

    bool operator==(const TrialResult&) const = default;
};

/// One channel draw with setup.fields_per_trial eavesdropper fields, all three modes.
TrialResult run_trial(const TrialSetup& setup, std::uint64_t trial_index);

/// Reference loop.
std::vector<TrialResult> run_trials_serial(const TrialSetup& setup, int n_trials);
/// OpenMP over trials. Bit-identical to run_trials_serial for any worker count (0 = default).
std::vector<TrialResult> run_trials_parallel(const TrialSetup& setup, int n_trials, int workers = 0);

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    double count = 0.0;
};

struct ModeSummary {
    Estimate sum_rate;       ///< E[S]
    Estimate per_user_rate;  ///< E[R_k]
    Estimate outage;         ///< P(R_k = 0)
    Estimate conditional_outage;  ///< P(R_k = 0 | gamma_k > gamma_M,k)
};

struct McSummary {
    double trials = 0.0;
    Estimate bcc_sum_rate;
    Estimate legit_sinr;
    Estimate malicious_sinr;
    std::array<ModeSummary, kModeCount> modes{};
};

/// Standard errors treat trials (channel draws) as the independent unit.
McSummary summarize(const std::vector<TrialResult>& trials, const TrialSetup& setup);

// ---- fixed-link kernels ------------------------------------------------------------------

/// gamma_E for one fixed precoder column over independent fields; field i uses the plan
/// (seed, trial_index, Field, i). Indexed [mode][field].
std::array<std::vector<double>, kModeCount> fixed_link_eve_sinr_serial(const SystemConfig& cfg, const CVector& w_k,
                                                                      std::uint64_t trial_index, long n_fields,
                                                                      const WindowChoice& window);
std::array<std::vector<double>, kModeCount> fixed_link_eve_sinr_parallel(const SystemConfig& cfg,
                                                                        const CVector& w_k,
                                                                        std::uint64_t trial_index, long n_fields,
                                                                        const WindowChoice& window,
                                                                        int workers = 0);

/// Same draws with fading projected onto a direction of squared norm w_norm2, so one
/// exponential per point replaces the N-vector.
std::vector<double> projected_eve_sinr(const SystemConfig& cfg, CollusionMode mode, double w_norm2,
                                       std::uint64_t trial_index, long n_fields, const WindowChoice& window,
                                       int workers = 0);

Estimate mean_estimate(const std::vector<double>& samples);
/// Fraction of samples with x >= threshold, with its binomial standard error.
Estimate exceedance_estimate(const std::vector<double>& samples, double threshold);

}  // namespace bcce

#endif
