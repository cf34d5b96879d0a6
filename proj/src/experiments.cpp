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

#include "bcce/experiments.hpp"

#include <cmath>
#include <omp.h>

#include "bcce/analytics.hpp"
#include "bcce/asymptotics.hpp"
#include "bcce/error.hpp"
#include "bcce/monte_carlo.hpp"
#include "bcce/optimizer.hpp"
#include "bcce/sampling.hpp"
#include "bcce/sinr.hpp"

namespace bcce {

namespace {

// Rows whose estimate rests on fewer events than this are flagged.
constexpr double kMinEvents = 10.0;

void check_figure(const ExperimentSpec& spec, std::initializer_list<FigureId> allowed, const char* op) {
    if (spec.sweep.empty()) throw ConfigError(std::string(op) + ": empty sweep");
    if (spec.n_trials < 1 || spec.n_field_draws_per_channel < 1) {
        throw ConfigError(std::string(op) + ": trial and field counts must be at least 1");
    }
    if (spec.figure_id == FigureId::Custom) return;
    for (FigureId id : allowed) {
        if (spec.figure_id == id) return;
    }
    throw ConfigError(std::string(op) + " cannot run figure " + std::string(to_string(spec.figure_id)));
}

std::vector<CollusionMode> modes_of(const ExperimentSpec& spec) {
    if (!spec.modes.empty()) return spec.modes;
    return {CollusionMode::NonColluding, CollusionMode::Colluding};
}

void put(ExperimentRow& row, std::string name, Cell value) { row.values.emplace_back(std::move(name), value); }

void put(ExperimentRow& row, const std::string& name, const Estimate& e) {
    put(row, name, e.mean);
    put(row, name + "_se", e.std_error);
}

bool has_mean_rate_form(const SystemConfig& cfg, CollusionMode mode) {
    return cfg.eta_is_four() && mode != CollusionMode::NearestOnly;
}

Cell analytic_outage(const SystemConfig& cfg, CollusionMode mode) {
    if (mode == CollusionMode::NonColluding || cfg.eta_is_four()) return outage_ls(cfg, mode);
    return std::nullopt;
}

Cell when(bool ok, double value) { return ok ? Cell(value) : std::nullopt; }

ExperimentRows xi_vs_density(const ExperimentSpec& spec) {
    ExperimentRows rows;
    for (const SystemConfig& cfg : spec.sweep) {
        for (CollusionMode mode : modes_of(spec)) {
            const SystemConfig c = cfg.with_mode(mode);
            ExperimentRow row{c, mode, {}, static_cast<double>(spec.n_trials), "ok"};
            put(row, "xi_bcc_opt", xi_bcc_opt(c.network_load(), c.snr_linear()));
            put(row, "xi_bc_opt", xi_bc_opt(c.network_load(), c.snr_linear()));
            if (has_mean_rate_form(c, mode)) {
                const OptimizeResult ls = xi_bcce_opt(c, mode);
                put(row, "xi_bcce_ls", ls.xi_star);
                if (!ls.converged) row.flag = "ls_multiple_maxima";
            } else {
                put(row, "xi_bcce_ls", std::nullopt);
            }
            XiBarOptions opts;
            opts.fields_per_trial = spec.n_field_draws_per_channel;
            const OptimizeResult bar = xi_bar_finite(c, spec.n_trials, opts);
            put(row, "xi_bar", bar.xi_star);
            put(row, "mean_sum_rate_at_xi_bar", bar.objective_at_star);
            if (bar.has(kDegenerateObjective)) row.flag = "degenerate_objective";
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ExperimentRows xi_gap_vs_n(const ExperimentSpec& spec) {
    ExperimentRows rows;
    const std::vector<CollusionMode> modes =
        spec.modes.empty() ? std::vector<CollusionMode>{CollusionMode::Colluding} : spec.modes;
    for (const SystemConfig& cfg : spec.sweep) {
        for (CollusionMode mode : modes) {
            const SystemConfig c = cfg.with_mode(mode);
            const double xi_ls =
                has_mean_rate_form(c, mode) ? xi_bcce_opt(c, mode).xi_star : xi_bcc_opt(c.network_load(), c.snr_linear());
            const WindowChoice window = choose_window(c, large_system_sinr(c.with_regularization(xi_ls)).gamma);
            const int n = spec.n_trials;
            std::vector<double> s_star(n), s_ls(n);
            const int threads = spec.workers > 0 ? spec.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (int t = 0; t < n; ++t) {
                const SeedPlan plan{c.master_seed(), static_cast<std::uint64_t>(t), StreamLabel::Channel, 0};
                const ChannelRealization h = sample_channel(c, plan);
                const ExternalSinrEvaluator eve(sample_eavesdropper_field(c, plan, window), c, mode);
                const double extra[] = {xi_ls};
                s_ls[t] = realized_sum_rate(h, eve, c, xi_ls);
                s_star[t] = xi_star_realization(h, eve, c, extra).objective_at_star;
            }
            const Estimate star = mean_estimate(s_star);
            const Estimate ls = mean_estimate(s_ls);
            ExperimentRow row{c.with_regularization(xi_ls), mode, {}, static_cast<double>(n), "ok"};
            put(row, "xi_bcce_ls", xi_ls);
            put(row, "sim_sum_rate_star", star);
            put(row, "sim_sum_rate_ls", ls);
            if (star.mean > 0.0) {
                const double gap = (star.mean - ls.mean) / star.mean;
                // Delta method on the ratio of paired means.
                std::vector<double> lin(n);
                for (int t = 0; t < n; ++t) lin[t] = (s_star[t] - s_ls[t]) - gap * s_star[t];
                put(row, "normalized_gap", gap);
                put(row, "normalized_gap_se", mean_estimate(lin).std_error / star.mean);
            } else {
                put(row, "normalized_gap", std::nullopt);
                put(row, "normalized_gap_se", std::nullopt);
                row.flag = "zero_optimal_rate";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace

std::string_view to_string(FigureId id) {
    switch (id) {
        case FigureId::OutageVsN: return "fig2";
        case FigureId::SumRateVsSnr: return "fig3";
        case FigureId::RateVsN: return "fig4";
        case FigureId::BccVsBcce: return "fig5";
        case FigureId::XiVsDensity: return "fig6";
        case FigureId::XiGapVsN: return "fig7";
        case FigureId::Custom: return "custom";
    }
    return "custom";
}

FigureId parse_figure_id(std::string_view text) {
    for (FigureId id : {FigureId::OutageVsN, FigureId::SumRateVsSnr, FigureId::RateVsN, FigureId::BccVsBcce,
                        FigureId::XiVsDensity, FigureId::XiGapVsN, FigureId::Custom}) {
        if (text == to_string(id)) return id;
    }
    throw ConfigError("unknown figure id '" + std::string(text) + "' (expected fig2..fig7 or custom)");
}

Cell ExperimentRow::get(std::string_view name) const {
    for (const auto& [key, value] : values) {
        if (key == name) return value;
    }
    return std::nullopt;
}

ExperimentRows run_outage_sweep(const ExperimentSpec& spec) {
    check_figure(spec, {FigureId::OutageVsN}, "outage sweep");
    ExperimentRows rows;
    for (const SystemConfig& cfg : spec.sweep) {
        const TrialSetup setup = make_trial_setup(cfg, spec.n_field_draws_per_channel);
        const McSummary s = summarize(run_trials_parallel(setup, spec.n_trials, spec.workers), setup);
        const LargeSystemSinr ls = large_system_sinr(cfg);
        for (CollusionMode mode : modes_of(spec)) {
            const ModeSummary& m = s.modes[mode_slot(mode)];
            ExperimentRow row{cfg.with_mode(mode), mode, {}, s.trials, "ok"};
            put(row, "gamma_ls", ls.gamma);
            put(row, "gamma_m_ls", ls.gamma_m);
            put(row, "sim_outage", m.outage);
            put(row, "sim_conditional_outage", m.conditional_outage);
            put(row, "eligible_pairs", m.conditional_outage.count);
            put(row, "analytic_outage", analytic_outage(cfg, mode));
            if (mode == CollusionMode::NearestOnly && cfg.eta_is_four()) {
                put(row, "analytic_outage_verbatim", outage_nearest_ls(cfg).verbatim);
            }
            const double events = m.outage.mean * s.trials * spec.n_field_draws_per_channel * cfg.n_users();
            if (cfg.eavesdropper_density() > 0.0 && events < kMinEvents) row.flag = "few_outage_events";
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ExperimentRows run_rate_sweeps(const ExperimentSpec& spec) {
    check_figure(spec, {FigureId::SumRateVsSnr, FigureId::RateVsN, FigureId::BccVsBcce}, "rate sweep");
    const bool bcc_columns = spec.figure_id == FigureId::BccVsBcce || spec.figure_id == FigureId::Custom;
    ExperimentRows rows;
    for (const SystemConfig& cfg : spec.sweep) {
        const TrialSetup setup = make_trial_setup(cfg, spec.n_field_draws_per_channel);
        const McSummary s = summarize(run_trials_parallel(setup, spec.n_trials, spec.workers), setup);
        const double n = cfg.n_antennas();
        const double k = cfg.n_users();
        for (CollusionMode mode : modes_of(spec)) {
            const ModeSummary& m = s.modes[mode_slot(mode)];
            const bool closed = has_mean_rate_form(cfg, mode);
            const double r_ls = closed ? mean_secrecy_rate_ls(cfg, mode) : 0.0;
            ExperimentRow row{cfg.with_mode(mode), mode, {}, s.trials, "ok"};
            put(row, "sim_sum_rate_per_antenna", Estimate{m.sum_rate.mean / n, m.sum_rate.std_error / n, 0});
            put(row, "analytic_sum_rate_per_antenna", when(closed, k * r_ls / n));
            put(row, "sim_user_rate", m.per_user_rate);
            put(row, "analytic_user_rate", when(closed, r_ls));
            if (spec.figure_id == FigureId::Custom) {
                put(row, "sim_outage", m.outage);
                put(row, "sim_conditional_outage", m.conditional_outage);
                put(row, "analytic_outage", analytic_outage(cfg, mode));
            }
            if (bcc_columns) {
                const double r_bcc = r_bcc_ls({cfg.network_load(), cfg.snr_linear(), cfg.regularization()});
                put(row, "sim_bcc_user_rate", Estimate{s.bcc_sum_rate.mean / k, s.bcc_sum_rate.std_error / k, 0});
                put(row, "analytic_bcc_user_rate", r_bcc);
                if (closed) {
                    const RateLoss loss = rate_loss_bound(cfg, mode);
                    put(row, "delta_e", loss.delta_e);
                    put(row, "delta_e_ub", loss.delta_ub);
                    put(row, "nu", loss.nu);
                    if (loss.delta_e > loss.delta_ub) row.flag = "rate_loss_bound_violated";
                } else {
                    put(row, "delta_e", std::nullopt);
                    put(row, "delta_e_ub", std::nullopt);
                    put(row, "nu", std::nullopt);
                }
            }
            if (m.per_user_rate.mean > 0.0 && m.per_user_rate.std_error > 0.1 * m.per_user_rate.mean) {
                row.flag = "low_precision";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

ExperimentRows run_xi_experiments(const ExperimentSpec& spec) {
    check_figure(spec, {FigureId::XiVsDensity, FigureId::XiGapVsN}, "xi experiment");
    return spec.figure_id == FigureId::XiGapVsN ? xi_gap_vs_n(spec) : xi_vs_density(spec);
}

ExperimentRows run_experiment(const ExperimentSpec& spec) {
    switch (spec.figure_id) {
        case FigureId::OutageVsN: return run_outage_sweep(spec);
        case FigureId::SumRateVsSnr:
        case FigureId::RateVsN:
        case FigureId::BccVsBcce:
        case FigureId::Custom: return run_rate_sweeps(spec);
        case FigureId::XiVsDensity:
        case FigureId::XiGapVsN: return run_xi_experiments(spec);
    }
    return {};
}

ExperimentSpec figure_spec(FigureId id, const FigureOptions& opts) {
    ExperimentSpec spec;
    spec.figure_id = id;
    spec.output_path = opts.output_path;
    spec.workers = opts.workers;

    auto make = [&](long n, double beta, double snr_db, double lambda_e) {
        RawConfig r;
        r.n_antennas = n;
        r.network_load = beta;
        r.snr_db = snr_db;
        r.path_loss_exponent = 4.0;
        r.eavesdropper_density = lambda_e;
        r.seed = opts.seed;
        return validate_config(r);
    };

    switch (id) {
        case FigureId::OutageVsN:
            for (double lam : {0.05, 0.1}) {
                for (long n : {10, 20, 34, 60}) spec.sweep.push_back(make(n, 1.0, 10.0, lam));
            }
            break;
        case FigureId::SumRateVsSnr:
            for (double beta : {0.5, 0.8, 1.0}) {
                for (double db = -10.0; db <= 30.0; db += 5.0) spec.sweep.push_back(make(10, beta, db, 0.1));
            }
            break;
        case FigureId::RateVsN:
        case FigureId::BccVsBcce:
            for (double lam : {0.05, 0.1, 0.2}) {
                for (long n : {10, 20, 40, 80}) spec.sweep.push_back(make(n, 1.0, 10.0, lam));
            }
            break;
        case FigureId::XiVsDensity:
            spec.n_trials = 500;
            spec.n_field_draws_per_channel = 4;
            for (double lam : {1e-3, 1e-2, 1e-1, 1.0, 10.0}) spec.sweep.push_back(make(10, 1.0, 10.0, lam));
            break;
        case FigureId::XiGapVsN:
            spec.n_trials = 500;
            spec.n_field_draws_per_channel = 1;
            spec.modes = {CollusionMode::Colluding};
            for (double db : {0.0, 10.0}) {
                for (double lam : {0.05, 0.1, 0.2}) {
                    for (long n : {5, 10, 15, 20}) spec.sweep.push_back(make(n, 1.0, db, lam));
                }
            }
            break;
        case FigureId::Custom: break;
    }
    if (opts.trials) spec.n_trials = *opts.trials;
    if (opts.fields_per_trial) spec.n_field_draws_per_channel = *opts.fields_per_trial;
    if (spec.n_trials < 1 || spec.n_field_draws_per_channel < 1) {
        throw ConfigError("trial and field counts must be at least 1");
    }
    return spec;
}

}  // namespace bcce
