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

#include <chrono>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <string>

#include <CLI11.hpp>

#include "bcce/analytics.hpp"
#include "bcce/asymptotics.hpp"
#include "bcce/config.hpp"
#include "bcce/error.hpp"
#include "bcce/experiments.hpp"
#include "bcce/optimizer.hpp"
#include "bcce/output.hpp"
#include "bcce/sampling.hpp"

namespace {

using namespace bcce;

enum ExitCode { kOk = 0, kFailure = 1, kBadFlags = 2, kNoClosedForm = 3, kUnwritable = 4 };

struct ModelFlags {
    long n = 0;
    long k = 0;
    double beta = 0.0;
    double snr_db = 0.0;
    double eta = 0.0;
    double lambda_e = 0.0;
    double xi = 0.0;
    std::string mode;
    std::uint64_t seed = 0;
    std::string config;

    CLI::Option* o_n = nullptr;
    CLI::Option* o_k = nullptr;
    CLI::Option* o_beta = nullptr;
    CLI::Option* o_snr = nullptr;
    CLI::Option* o_eta = nullptr;
    CLI::Option* o_lambda = nullptr;
    CLI::Option* o_xi = nullptr;
    CLI::Option* o_mode = nullptr;
    CLI::Option* o_seed = nullptr;

    void attach(CLI::App& app) {
        o_n = app.add_option("--n", n, "transmit antennas N (default 10)");
        o_k = app.add_option("--k", k, "users K");
        o_beta = app.add_option("--beta", beta, "network load K/N (default 1)");
        o_snr = app.add_option("--snr-db", snr_db, "SNR in dB (default 10)");
        o_eta = app.add_option("--eta", eta, "path-loss exponent (default 4)");
        o_lambda = app.add_option("--lambda-e", lambda_e, "eavesdropper density (default 0.1)");
        o_xi = app.add_option("--xi", xi, "RCI regularization (default: large-system BCC optimum)");
        o_mode = app.add_option("--mode", mode, "noncolluding | colluding | nearest")
                     ->check(CLI::IsMember({"noncolluding", "colluding", "nearest"}));
        o_seed = app.add_option("--seed", seed, "master seed")->envname("BCCE_SEED");
        app.add_option("--config", config, "key = value config file; flags override it");
    }

    bool mode_given() const { return o_mode->count() > 0 || !config_mode_.empty(); }

    SystemConfig resolve() {
        RawConfig raw;
        if (!config.empty()) raw = load_config_file(config);
        if (raw.collusion_mode) config_mode_ = std::string(to_string(*raw.collusion_mode));
        RawConfig f;
        if (o_n->count()) f.n_antennas = n;
        if (o_k->count()) f.n_users = k;
        if (o_beta->count()) f.network_load = beta;
        if (o_snr->count()) f.snr_db = snr_db;
        if (o_eta->count()) f.path_loss_exponent = eta;
        if (o_lambda->count()) f.eavesdropper_density = lambda_e;
        if (o_xi->count()) f.regularization = xi;
        if (o_mode->count()) f.collusion_mode = parse_collusion_mode(mode);
        if (o_seed->count()) f.seed = seed;
        raw.merge(f);
        if (!raw.n_antennas) raw.n_antennas = 10;
        if (!raw.n_users && !raw.network_load) raw.network_load = 1.0;
        if (!raw.snr_db && !raw.snr_linear) raw.snr_db = 10.0;
        if (!raw.path_loss_exponent) raw.path_loss_exponent = 4.0;
        if (!raw.eavesdropper_density) raw.eavesdropper_density = 0.1;
        return validate_config(raw);
    }

private:
    std::string config_mode_;
};

struct RunFlags {
    int trials = 2000;
    int fields = 16;
    int workers = 0;
    std::string out;
    CLI::Option* o_trials = nullptr;
    CLI::Option* o_fields = nullptr;

    void attach(CLI::App& app, bool with_fields = true) {
        o_trials = app.add_option("--trials", trials, "channel trials");
        if (with_fields) o_fields = app.add_option("--fields-per-trial", fields, "eavesdropper fields per channel");
        app.add_option("--workers", workers, "worker threads (default: machine parallelism)");
        app.add_option("--out", out, "output CSV path (a .json manifest is written beside it)");
    }

    void check() const {
        if (trials < 1) throw ConfigError("--trials must be at least 1");
        if (fields < 1) throw ConfigError("--fields-per-trial must be at least 1");
        if (workers < 0) throw ConfigError("--workers must be nonnegative");
    }
};

void print_kv(const char* key, double value) { std::printf("%s = %.17g\n", key, value); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs spec and writes CSV + manifest. The .partial files exist from the start.
int run_and_write(ExperimentSpec spec) {
    if (spec.output_path.empty()) spec.output_path = std::string(to_string(spec.figure_id)) + ".csv";
    const std::filesystem::path csv_path = spec.output_path;
    AtomicFile csv_file(csv_path);
    AtomicFile manifest_file(manifest_path_for(csv_path));
    const auto t0 = std::chrono::steady_clock::now();
    const ExperimentRows rows = run_experiment(spec);
    const std::string csv = rows_to_csv(rows);
    const std::string sha = git_blob_sha1(csv);
    csv_file.commit(csv);
    manifest_file.commit(manifest_json(spec, csv_path, sha, seconds_since(t0), rows.size()));
    std::printf("wrote %s rows %zu sha1 %s\n", csv_path.string().c_str(), rows.size(), sha.c_str());
    return kOk;
}

int cmd_analytic(ModelFlags& mf, bool as_json) {
    const SystemConfig cfg = mf.resolve();
    const CollusionMode mode = cfg.collusion_mode();
    if (mode != CollusionMode::NonColluding && !cfg.eta_is_four()) {
        throw UnsupportedClosedForm(std::string(to_string(mode)) +
                                    " closed forms exist only for path-loss exponent 4; use simulate instead");
    }
    const LargeSystemSinr s = large_system_sinr(cfg);
    nlohmann::ordered_json j;
    j["n_antennas"] = cfg.n_antennas();
    j["n_users"] = cfg.n_users();
    j["network_load"] = cfg.network_load();
    j["snr_linear"] = cfg.snr_linear();
    j["path_loss_exponent"] = cfg.path_loss_exponent();
    j["eavesdropper_density"] = cfg.eavesdropper_density();
    j["regularization"] = cfg.regularization();
    j["collusion_mode"] = std::string(to_string(mode));
    j["gamma_ls"] = s.gamma;
    j["gamma_m_ls"] = s.gamma_m;
    j["r_bcc_ls"] = r_bcc_ls({cfg.network_load(), cfg.snr_linear(), cfg.regularization()});
    j["xi_bcc_opt"] = xi_bcc_opt(cfg.network_load(), cfg.snr_linear());
    j["xi_bc_opt"] = xi_bc_opt(cfg.network_load(), cfg.snr_linear());
    j["outage_ls"] = outage_ls(cfg, mode);
    if (cfg.eta_is_four()) {
        j["mu"] = mu_constant(cfg);
        if (mode == CollusionMode::NearestOnly) {
            j["outage_ls_verbatim"] = outage_nearest_ls(cfg).verbatim;
        } else {
            const LargeSystemPoint p = large_system_point(cfg, mode);
            j["p_ls"] = p.p_ls;
            j["r_mean_ls"] = p.r_mean_ls;
            j["delta_e"] = p.delta_e;
            j["delta_e_ub"] = p.delta_ub;
            j["nu"] = p.nu;
        }
        if (s.gamma > s.gamma_m) j["n_min_eps_0_1"] = min_antennas(0.1, cfg.eavesdropper_density(), cfg.network_load(),
                                                                   cfg.noise_power(), s.gamma);
    }
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            std::printf("%s = %s\n", key.c_str(), value.get<std::string>().c_str());
        } else if (value.is_number_integer()) {
            std::printf("%s = %lld\n", key.c_str(), value.get<long long>());
        } else {
            print_kv(key.c_str(), value.get<double>());
        }
    }
    return kOk;
}

int cmd_simulate(ModelFlags& mf, RunFlags& rf) {
    rf.check();
    const SystemConfig cfg = mf.resolve();
    ExperimentSpec spec;
    spec.figure_id = FigureId::Custom;
    spec.sweep = {cfg};
    spec.n_trials = rf.trials;
    spec.n_field_draws_per_channel = rf.fields;
    spec.workers = rf.workers;
    spec.output_path = rf.out.empty() ? "simulate.csv" : rf.out;
    if (mf.mode_given()) spec.modes = {cfg.collusion_mode()};
    return run_and_write(spec);
}

int cmd_optimize(const std::string& target, ModelFlags& mf, RunFlags& rf) {
    rf.check();
    const SystemConfig cfg = mf.resolve();
    const CollusionMode mode = cfg.collusion_mode();
    OptimizeResult r;
    if (target == "xi-bcce") {
        if (mode == CollusionMode::NearestOnly) throw UnsupportedClosedForm("xi-bcce needs noncolluding or colluding mode");
        if (!cfg.eta_is_four()) throw UnsupportedClosedForm("xi-bcce uses closed forms that need path-loss exponent 4");
        r = xi_bcce_opt(cfg, mode);
    } else if (target == "xi-star") {
        const SeedPlan plan{cfg.master_seed(), 0, StreamLabel::Channel, 0};
        const WindowChoice window = choose_window(cfg, large_system_sinr(cfg).gamma);
        r = xi_star_realization(sample_channel(cfg, plan), sample_eavesdropper_field(cfg, plan, window), cfg);
    } else {
        XiBarOptions opts;
        opts.fields_per_trial = rf.fields;
        r = xi_bar_finite(cfg, rf.trials, opts);
    }
    std::printf("target = %s\n", target.c_str());
    print_kv("xi_star", r.xi_star);
    print_kv("objective_at_star", r.objective_at_star);
    print_kv("bracket_lo", r.bracket_lo);
    print_kv("bracket_hi", r.bracket_hi);
    std::printf("evaluations = %d\nconverged = %d\nflags = %u\n", r.evaluations, r.converged ? 1 : 0, r.flags);
    if (!rf.out.empty()) {
        ExperimentRow row{cfg.with_regularization(r.xi_star), mode, {}, 0.0, "ok"};
        row.values = {{"xi_star", r.xi_star}, {"objective_at_star", r.objective_at_star},
                      {"bracket_lo", r.bracket_lo}, {"bracket_hi", r.bracket_hi},
                      {"evaluations", double(r.evaluations)}};
        row.trials = target == "xi-bar" ? rf.trials : (target == "xi-star" ? 1 : 0);
        if (!r.converged) row.flag = "not_converged";
        ExperimentSpec spec;
        spec.sweep = {cfg};
        spec.output_path = rf.out;
        AtomicFile csv_file(rf.out);
        AtomicFile manifest_file(manifest_path_for(rf.out));
        const std::string csv = rows_to_csv({row});
        const std::string sha = git_blob_sha1(csv);
        csv_file.commit(csv);
        manifest_file.commit(manifest_json(spec, rf.out, sha, 0.0, 1));
        std::printf("wrote %s rows 1 sha1 %s\n", rf.out.c_str(), sha.c_str());
    }
    return kOk;
}

int cmd_reproduce(const std::string& figure, ModelFlags& mf, RunFlags& rf) {
    FigureOptions opts;
    opts.seed = mf.o_seed->count() ? mf.seed : 0;
    if (rf.o_trials->count()) opts.trials = rf.trials;
    if (rf.o_fields->count()) opts.fields_per_trial = rf.fields;
    opts.workers = rf.workers;
    opts.output_path = rf.out;
    rf.check();
    return run_and_write(figure_spec(parse_figure_id(figure), opts));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy rates of RCI precoding with Poisson-placed external eavesdroppers"};
    app.require_subcommand(1);

    ModelFlags analytic_mf;
    bool as_json = false;
    auto* analytic = app.add_subcommand("analytic", "large-system closed forms for one configuration");
    analytic_mf.attach(*analytic);
    analytic->add_flag("--json", as_json, "print JSON instead of key = value lines");

    ModelFlags sim_mf;
    RunFlags sim_rf;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo rates and outage for one configuration");
    sim_mf.attach(*simulate);
    sim_rf.attach(*simulate);

    ModelFlags opt_mf;
    RunFlags opt_rf;
    std::string target;
    auto* optimize = app.add_subcommand("optimize", "regularization search");
    optimize->add_option("target", target, "xi-bcce | xi-star | xi-bar")
        ->required()
        ->check(CLI::IsMember({"xi-bcce", "xi-star", "xi-bar"}));
    opt_mf.attach(*optimize);
    opt_rf.attach(*optimize);

    ModelFlags rep_mf;
    RunFlags rep_rf;
    std::string figure;
    auto* reproduce = app.add_subcommand("reproduce", "desk-scale figure grids");
    reproduce->add_option("figure", figure, "fig2 .. fig7")->required();
    rep_mf.attach(*reproduce);
    rep_rf.attach(*reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadFlags;
    }

    try {
        if (*analytic) return cmd_analytic(analytic_mf, as_json);
        if (*simulate) return cmd_simulate(sim_mf, sim_rf);
        if (*optimize) return cmd_optimize(target, opt_mf, opt_rf);
        if (*reproduce) return cmd_reproduce(figure, rep_mf, rep_rf);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kBadFlags;
    } catch (const UnsupportedClosedForm& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kNoClosedForm;
    } catch (const OutputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUnwritable;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFailure;
    }
    return kFailure;
}
