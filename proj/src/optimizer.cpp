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

#include "bcce/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "bcce/analytics.hpp"
#include "bcce/asymptotics.hpp"
#include "bcce/error.hpp"
#include "bcce/precoder.hpp"
#include "bcce/rates.hpp"
#include "bcce/sampling.hpp"

namespace bcce {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_degenerate(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0 || x == kNegInf; });
}

}  // namespace

OptimizeResult maximize_scan_golden(const std::function<double(double)>& f, const ScanOptions& opts,
                                    std::span<const double> extra) {
    if (!(opts.lo > 0.0 && opts.hi > opts.lo) || opts.grid_points < 3) {
        throw ConfigError("scan needs 0 < lo < hi and at least 3 grid points");
    }
    OptimizeResult res;
    const int n = opts.grid_points;
    const double t_lo = std::log(opts.lo);
    const double t_hi = std::log(opts.hi);
    std::vector<double> xs(n), fs(n);
    for (int i = 0; i < n; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (n - 1);
        xs[i] = i == n - 1 ? opts.hi : (i == 0 ? opts.lo : std::exp(t));
        fs[i] = f(xs[i]);
    }
    res.evaluations = n;

    if (is_degenerate(fs)) {
        res.flags |= kDegenerateObjective;
        const auto best = std::max_element(fs.begin(), fs.end());
        res.xi_star = xs[best - fs.begin()];
        res.objective_at_star = *best;
        res.bracket_lo = opts.lo;
        res.bracket_hi = opts.hi;
        res.converged = true;
        return res;
    }

    const int best = static_cast<int>(std::max_element(fs.begin(), fs.end()) - fs.begin());
    const double fmax = fs[best];
    const double fmin = *std::min_element(fs.begin(), fs.end());
    const double tiny = 1e-12 * std::max(1.0, std::abs(fmax));

    if (fmax - fmin <= tiny) {
        res.flags |= kFlatObjective;
        res.xi_star = xs[best];
        res.objective_at_star = fmax;
        res.bracket_lo = opts.lo;
        res.bracket_hi = opts.hi;
        res.converged = true;
        return res;
    }

    int peaks = 0;
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? fs[i - 1] : kNegInf;
        const double right = i + 1 < n ? fs[i + 1] : kNegInf;
        // A plateau counts once, at its left end.
        if (fs[i] > left + tiny && fs[i] + tiny >= right) {
            int j = i;
            while (j + 1 < n && std::abs(fs[j + 1] - fs[i]) <= tiny) ++j;
            if (j + 1 >= n || fs[j + 1] < fs[i] - tiny) ++peaks;
        }
    }
    res.converged = peaks <= 1;
    if (peaks > 1) res.flags |= kMultipleMaxima;

    const int lo_i = std::max(best - 1, 0);
    const int hi_i = std::min(best + 1, n - 1);
    res.bracket_lo = xs[lo_i];
    res.bracket_hi = xs[hi_i];
    double x_best = xs[best];
    double f_best = fmax;
    auto consider = [&](double x, double v) {
        if (v > f_best) {
            f_best = v;
            x_best = x;
        }
    };

    // Golden section in t = log xi.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::log(res.bracket_lo);
    double b = std::log(res.bracket_hi);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(std::exp(c));
    double fd = f(std::exp(d));
    res.evaluations += 2;
    consider(std::exp(c), fc);
    consider(std::exp(d), fd);
    const double width = std::log1p(opts.rel_width);
    int iter = 0;
    while (b - a > width && iter < opts.max_refine_iterations) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(std::exp(c));
            consider(std::exp(c), fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(std::exp(d));
            consider(std::exp(d), fd);
        }
        ++res.evaluations;
        ++iter;
    }
    if (b - a > width) res.converged = false;

    for (double x : extra) {
        if (!(x > 0.0)) continue;
        const double v = f(x);
        ++res.evaluations;
        if (v > f_best) {
            f_best = v;
            x_best = x;
            res.flags |= kExtraCandidateWon;
        }
    }
    res.xi_star = x_best;
    res.objective_at_star = f_best;
    res.bracket_lo = std::min(res.bracket_lo, x_best);
    res.bracket_hi = std::max(res.bracket_hi, x_best);
    return res;
}

OptimizeResult xi_bcce_opt(const SystemConfig& cfg, CollusionMode mode, const ScanOptions& opts) {
    auto objective = [&](double xi) {
        const auto s = gamma_ls({cfg.network_load(), cfg.snr_linear(), xi});
        return log_mean_secrecy_rate(s.gamma, s.gamma_m, cfg, mode);
    };
    OptimizeResult res = maximize_scan_golden(objective, opts);
    if (res.has(kDegenerateObjective)) {
        res.xi_star = xi_bc_opt(cfg.network_load(), cfg.snr_linear());
        res.objective_at_star = objective(res.xi_star);
    }
    return res;
}

double realized_sum_rate(const ChannelRealization& h, const ExternalSinrEvaluator& eve, const SystemConfig& cfg,
                         double xi) {
    const PrecodeResult w = build_rci(h.h, xi);
    const RVector legit = legit_sinr(h.h, w.w, cfg.snr_linear());
    const RVector mal = malicious_sinr(h.h, w.w, cfg.snr_linear());
    const RVector ext = eve(w.w);
    double s = 0.0;
    for (Eigen::Index k = 0; k < legit.size(); ++k) s += bcce_rate(legit[k], mal[k], ext[k]);
    return s;
}

OptimizeResult xi_star_realization(const ChannelRealization& h, const ExternalSinrEvaluator& eve,
                                   const SystemConfig& cfg, std::span<const double> extra,
                                   const ScanOptions& opts) {
    auto objective = [&](double xi) { return realized_sum_rate(h, eve, cfg, xi); };
    OptimizeResult res = maximize_scan_golden(objective, opts, extra);
    if (res.has(kDegenerateObjective)) {
        res.xi_star = xi_bc_opt(cfg.network_load(), cfg.snr_linear());
        res.objective_at_star = objective(res.xi_star);
    }
    return res;
}

OptimizeResult xi_star_realization(const ChannelRealization& h, const EavesdropperField& field,
                                   const SystemConfig& cfg, std::span<const double> extra,
                                   const ScanOptions& opts) {
    const ExternalSinrEvaluator eve(field, cfg, cfg.collusion_mode());
    return xi_star_realization(h, eve, cfg, extra, opts);
}

OptimizeResult xi_bar_finite(const SystemConfig& cfg, int n_trials, const XiBarOptions& opts) {
    if (n_trials < 1 || opts.fields_per_trial < 1) throw ConfigError("xi_bar_finite needs at least one trial");
    const CollusionMode mode = cfg.collusion_mode();
    const WindowChoice window = choose_window(cfg, large_system_sinr(cfg).gamma);
    const Eigen::Index keep = mode == CollusionMode::NonColluding ? opts.max_cached_points : 0;

    struct Draw {
        SeedPlan plan;
        ExternalSinrEvaluator eve;
    };
    const int per = opts.fields_per_trial;
    std::vector<ChannelRealization> channels(n_trials);
    std::vector<Draw> draws;
    draws.reserve(static_cast<std::size_t>(n_trials) * per);
    for (int t = 0; t < n_trials; ++t) {
        const SeedPlan base{cfg.master_seed(), static_cast<std::uint64_t>(t), StreamLabel::Channel, 0};
        channels[t] = sample_channel(cfg, base);
        for (int d = 0; d < per; ++d) {
            SeedPlan p = base.relabel(StreamLabel::Field);
            p.draw_index = static_cast<std::uint64_t>(d);
            draws.push_back({p, ExternalSinrEvaluator(sample_eavesdropper_field(cfg, p, window), cfg, mode, keep)});
        }
    }

    auto objective = [&](double xi) {
        std::vector<double> per_draw(draws.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(draws.size()); ++i) {
            const auto& h = channels[static_cast<std::size_t>(i / per)];
            const PrecodeResult w = build_rci(h.h, xi);
            const RVector legit = legit_sinr(h.h, w.w, cfg.snr_linear());
            const RVector mal = malicious_sinr(h.h, w.w, cfg.snr_linear());
            RVector ext;
            if (!draws[i].eve.evaluate(w.w, ext)) {
                const ExternalSinrEvaluator full(sample_eavesdropper_field(cfg, draws[i].plan, window), cfg, mode);
                ext = full(w.w);
            }
            double s = 0.0;
            for (Eigen::Index k = 0; k < legit.size(); ++k) s += bcce_rate(legit[k], mal[k], ext[k]);
            per_draw[i] = s;
        }
        double total = 0.0;
        for (double v : per_draw) total += v;
        return total / static_cast<double>(per_draw.size());
    };
    OptimizeResult res = maximize_scan_golden(objective, opts.scan);
    if (res.has(kDegenerateObjective)) {
        res.xi_star = xi_bc_opt(cfg.network_load(), cfg.snr_linear());
        res.objective_at_star = objective(res.xi_star);
    }
    return res;
}

}  // namespace bcce
