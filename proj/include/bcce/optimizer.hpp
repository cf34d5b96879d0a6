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

#ifndef BCCE_OPTIMIZER_HPP
#define BCCE_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "bcce/config.hpp"
#include "bcce/sinr.hpp"
#include "bcce/types.hpp"

namespace bcce {

enum OptimizeFlag : unsigned {
    kFlatObjective = 1u << 0,        ///< objective constant over the bracket
    kDegenerateObjective = 1u << 1,  ///< objective zero (or -inf in log form) everywhere
    kMultipleMaxima = 1u << 2,       ///< coarse scan found more than one local maximum
    kExtraCandidateWon = 1u << 3,    ///< a caller-supplied point beat the scan
};

struct ScanOptions {
    double lo = 1e-5;
    double hi = 10.0;
    int grid_points = 64;
    double rel_width = 1e-4;
    int max_refine_iterations = 200;
};

struct OptimizeResult {
    double xi_star = 0.0;
    double objective_at_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int evaluations = 0;
    /// False when several local maxima were seen or the refinement ran out of iterations.
    bool converged = false;
    unsigned flags = 0;

    bool has(OptimizeFlag f) const noexcept { return (flags & f) != 0; }
};

/// Maximizes f over [lo, hi]: log-spaced scan, then golden-section search in log xi inside
/// the best coarse cell. Values of -inf are allowed. Extra points are evaluated too and win
/// if strictly better.
OptimizeResult maximize_scan_golden(const std::function<double(double)>& f, const ScanOptions& opts = {},
                                    std::span<const double> extra = {});

/// argmax over xi of the large-system mean secrecy rate. objective_at_star holds log R.
/// eta = 4 and mode NonColluding or Colluding. A degenerate objective yields beta / rho.
OptimizeResult xi_bcce_opt(const SystemConfig& cfg, CollusionMode mode, const ScanOptions& opts = {});

/// Realized secrecy sum rate S(xi) of one (H, field) pair.
double realized_sum_rate(const ChannelRealization& h, const ExternalSinrEvaluator& eve, const SystemConfig& cfg,
                         double xi);

/// argmax over xi of the realized sum rate for one (H, field) pair.
OptimizeResult xi_star_realization(const ChannelRealization& h, const ExternalSinrEvaluator& eve,
                                   const SystemConfig& cfg, std::span<const double> extra = {},
                                   const ScanOptions& opts = {});
OptimizeResult xi_star_realization(const ChannelRealization& h, const EavesdropperField& field,
                                   const SystemConfig& cfg, std::span<const double> extra = {},
                                   const ScanOptions& opts = {});

struct XiBarOptions {
    int fields_per_trial = 1;
    ScanOptions scan{};
    /// NonColluding fields keep at most this many points in memory; dropped points are
    /// recovered by regenerating the field when they could matter.
    long max_cached_points = 32;
};

/// argmax over xi of the sum rate averaged over n_trials channel draws (each with
/// fields_per_trial eavesdropper fields). Every candidate xi sees the same realizations.
/// Mode and seed come from cfg.
OptimizeResult xi_bar_finite(const SystemConfig& cfg, int n_trials, const XiBarOptions& opts = {});

}  // namespace bcce

#endif
