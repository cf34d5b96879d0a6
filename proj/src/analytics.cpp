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

#include "bcce/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "bcce/error.hpp"
#include "bcce/specfun.hpp"
#include "quadrature.hpp"

namespace bcce {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void require_eta_four(const SystemConfig& cfg, const char* what) {
    if (!cfg.eta_is_four()) {
        throw UnsupportedClosedForm(std::string(what) + " has a closed form only for path-loss exponent 4");
    }
}

void require_mean_rate_mode(CollusionMode mode, const char* what) {
    if (mode == CollusionMode::NearestOnly) {
        throw UnsupportedClosedForm(std::string(what) + " is available for noncolluding and colluding modes only");
    }
}

// log2((1 + gamma) / (1 + y))
double log_ratio(double gamma, double y) { return (std::log1p(gamma) - std::log1p(y)) / std::numbers::ln2; }

double log_add_exp(double x, double y) {
    if (x == -kInf) return y;
    if (y == -kInf) return x;
    const double m = std::max(x, y);
    return m + std::log1p(std::exp(-std::abs(x - y)));
}

struct Quadrature {
    double value = 0.0;
    double error = 0.0;
};

// Adaptive Gauss-Kronrod over consecutive breakpoints.
template <typename F>
Quadrature integrate_pieces(F&& f, std::vector<double> breaks, const QuadratureOptions& opts, const char* what) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<detail::Segment> first(breaks.size() > 1 ? breaks.size() - 1 : 0);
    double scale = 0.0;
    for (std::size_t i = 0; i < first.size(); ++i) {
        first[i] = detail::gk31(f, breaks[i], breaks[i + 1]);
        scale += std::abs(first[i].value);
    }
    // Each piece gets a share of the total budget proportional to its width in piece count.
    const double budget = std::max(opts.rel_tol * scale, opts.abs_floor) / std::max<std::size_t>(first.size(), 1);
    Quadrature q;
    for (std::size_t i = 0; i < first.size(); ++i) {
        const detail::Segment s = first[i].error <= budget
                                      ? first[i]
                                      : detail::adaptive_gk(f, breaks[i], breaks[i + 1], budget, opts.max_depth);
        q.value += s.value;
        q.error += s.error;
    }
    if (!(q.error <= opts.rel_tol * std::abs(q.value) + opts.abs_floor) || !std::isfinite(q.value)) {
        throw QuadratureError(std::string(what) + ": quadrature did not reach tolerance", q.value, q.error);
    }
    return q;
}

// Breakpoints 0, s, 4s, 16s, ... and t/4, t, 4t, ... clipped to (0, upper), plus upper.
std::vector<double> scale_breaks(double upper, double s, double t) {
    std::vector<double> b{0.0, upper};
    for (double x = s; x < upper && x > 0.0 && b.size() < 40; x *= 4.0) b.push_back(x);
    for (double x = 0.25 * t; x < upper && x > 0.0 && b.size() < 80; x *= 4.0) b.push_back(x);
    return b;
}

struct LogTerms {
    double head = -kInf;   // log[F(gamma_m) log2((1+gamma)/(1+gamma_m))]
    double spread = -kInf;  // log int_{gamma_m}^{gamma} log2((1+gamma)/(1+y)) f(y) dy
};

// Core of the mean-rate evaluation, in log form. Assumes gamma > gamma_m and lambda > 0.
LogTerms mean_rate_terms(double gamma, double gamma_m, const EveSinrLaw& law, const QuadratureOptions& opts) {
    LogTerms t;
    if (gamma_m > 0.0) t.head = law.log_cdf(gamma_m) + std::log(log_ratio(gamma, gamma_m));

    const double a = law.scale();
    const double ug = 1.0 / std::sqrt(gamma);
    const double um = gamma_m > 0.0 ? 1.0 / std::sqrt(gamma_m) : kInf;
    const double phi_g = law.u_exponent(ug);

    // Length over which the shifted exponent phi(ug + v) - phi(ug) grows by `level`.
    auto reach = [&](double level) {
        if (law.mode() == CollusionMode::NonColluding) return level / a;
        const double b = kPi * a * a / 4.0;
        return (level / b) / (ug + std::sqrt(ug * ug + level / b));
    };
    const double vmax = std::min(um - ug, reach(60.0));
    if (!(vmax > 0.0)) return t;

    // log2((1+gamma)/(1+u^-2)) written without the cancellation at u = ug.
    const double ug2 = ug * ug;
    auto integrand = [&](double v) {
        const double u = ug + v;
        const double gap = std::log1p(v * (2.0 * ug + v) / (ug2 * (u * u + 1.0))) / std::numbers::ln2;
        const double decay = law.mode() == CollusionMode::NonColluding
                                 ? law.scale() * v
                                 : kPi * law.scale() * law.scale() / 4.0 * v * (2.0 * ug + v);
        return gap * std::exp(-decay);
    };
    const auto q = integrate_pieces(integrand, scale_breaks(vmax, reach(1.0), ug), opts, "mean secrecy rate");
    if (q.value > 0.0) t.spread = std::log(a) - phi_g + std::log(q.value);
    return t;
}

}  // namespace

double mu_constant(double beta, double noise_power) {
    return std::pow(kPi, 1.5) / (2.0 * std::sqrt(beta * noise_power));
}

double mu_constant(const SystemConfig& cfg) { return mu_constant(cfg.network_load(), cfg.noise_power()); }

LargeSystemSinr large_system_sinr(const SystemConfig& cfg) {
    return gamma_ls({cfg.network_load(), cfg.snr_linear(), cfg.regularization()});
}

double outage_noncolluding(double gamma, double gamma_m, const SystemConfig& cfg) {
    if (gamma <= gamma_m) return 1.0;
    const double lambda_e = cfg.eavesdropper_density();
    if (lambda_e == 0.0) return 0.0;
    const double eta = cfg.path_loss_exponent();
    const double scale = cfg.n_antennas() * cfg.network_load() * cfg.noise_power() * gamma;
    const double x = 2.0 * kPi * lambda_e * gamma_fn(2.0 / eta) / (eta * std::pow(scale, 2.0 / eta));
    return -std::expm1(-x);
}

double outage_noncolluding_ls(const SystemConfig& cfg) {
    const auto s = large_system_sinr(cfg);
    return outage_noncolluding(s.gamma, s.gamma_m, cfg);
}

double outage_nearest(double gamma, double gamma_m, const SystemConfig& cfg) {
    require_eta_four(cfg, "nearest-eavesdropper outage");
    if (gamma <= gamma_m) return 1.0;
    const double s = mu_constant(cfg) * cfg.eavesdropper_density() / std::sqrt(cfg.n_antennas() * gamma);
    if (s == 0.0) return 0.0;
    // 2 s exp(s^2/pi) Q(s sqrt(2/pi)) = s erfcx(s / sqrt(pi))
    return std::min(1.0, s * erfcx(s / std::sqrt(kPi)));
}

NearestOutageLs outage_nearest_ls(const SystemConfig& cfg) {
    require_eta_four(cfg, "nearest-eavesdropper outage");
    const auto s = large_system_sinr(cfg);
    NearestOutageLs out;
    out.at_gamma_ls = outage_nearest(s.gamma, s.gamma_m, cfg);
    if (s.gamma <= s.gamma_m) {
        out.verbatim = 1.0;
    } else {
        const double t = mu_constant(cfg) * cfg.eavesdropper_density() / std::sqrt(double(cfg.n_antennas()));
        out.verbatim = t * (1.0 + t * t / kPi) * (1.0 - 2.0 * t / kPi);
    }
    return out;
}

double outage_colluding(double gamma, double gamma_m, const SystemConfig& cfg) {
    require_eta_four(cfg, "colluding-eavesdropper outage");
    if (gamma <= gamma_m) return 1.0;
    // 1 - 2Q(x) = erf(x / sqrt 2), x = mu lambda sqrt(pi / (2 N gamma))
    const double x = mu_constant(cfg) * cfg.eavesdropper_density() * std::sqrt(kPi / (2.0 * cfg.n_antennas() * gamma));
    return std::erf(x / std::numbers::sqrt2);
}

double outage_colluding_ls(const SystemConfig& cfg) {
    const auto s = large_system_sinr(cfg);
    return outage_colluding(s.gamma, s.gamma_m, cfg);
}

double outage(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode) {
    switch (mode) {
        case CollusionMode::NonColluding: return outage_noncolluding(gamma, gamma_m, cfg);
        case CollusionMode::Colluding: return outage_colluding(gamma, gamma_m, cfg);
        case CollusionMode::NearestOnly: return outage_nearest(gamma, gamma_m, cfg);
    }
    return 1.0;
}

double outage_ls(const SystemConfig& cfg, CollusionMode mode) {
    const auto s = large_system_sinr(cfg);
    return outage(s.gamma, s.gamma_m, cfg, mode);
}

double min_antennas_bound(double eps, double lambda_e, double beta, double noise_power, double gamma_ls) {
    if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("target outage must lie in (0, 1)");
    if (!(gamma_ls > 0.0)) throw ConfigError("large-system SINR must be positive");
    const double r = mu_constant(beta, noise_power) * lambda_e / (eps * std::sqrt(gamma_ls));
    return r * r;
}

long min_antennas(double eps, double lambda_e, double beta, double noise_power, double gamma_ls) {
    const double bound = min_antennas_bound(eps, lambda_e, beta, noise_power, gamma_ls);
    return std::max(1L, static_cast<long>(std::floor(bound)) + 1);
}

double prob_eve_beats_malicious(double gamma_m, const SystemConfig& cfg, CollusionMode mode) {
    require_eta_four(cfg, "eavesdropper-vs-alliance probability");
    require_mean_rate_mode(mode, "eavesdropper-vs-alliance probability");
    if (gamma_m <= 0.0) return 1.0;
    return EveSinrLaw(cfg, mode).survival(gamma_m);
}

EveSinrLaw::EveSinrLaw(const SystemConfig& cfg, CollusionMode mode) : mode_(mode) {
    require_eta_four(cfg, "eavesdropper SINR law");
    require_mean_rate_mode(mode, "eavesdropper SINR law");
    mu_ = mu_constant(cfg);
    a_ = mu_ * cfg.eavesdropper_density() / std::sqrt(double(cfg.n_antennas()));
    b_ = kPi * a_ * a_ / 4.0;
}

double EveSinrLaw::density(double y) const {
    if (!(y > 0.0)) throw ConfigError("eavesdropper SINR density needs y > 0");
    if (a_ == 0.0) return 0.0;
    const double pre = 0.5 * a_ * std::pow(y, -1.5);
    return mode_ == CollusionMode::NonColluding ? pre * std::exp(-a_ / std::sqrt(y)) : pre * std::exp(-b_ / y);
}

double EveSinrLaw::cdf(double y) const {
    if (a_ == 0.0) return 1.0;
    if (y <= 0.0) return 0.0;
    return mode_ == CollusionMode::NonColluding ? std::exp(-a_ / std::sqrt(y)) : std::erfc(std::sqrt(b_ / y));
}

double EveSinrLaw::survival(double y) const {
    if (a_ == 0.0) return 0.0;
    if (y <= 0.0) return 1.0;
    return mode_ == CollusionMode::NonColluding ? -std::expm1(-a_ / std::sqrt(y)) : std::erf(std::sqrt(b_ / y));
}

double EveSinrLaw::log_cdf(double y) const {
    if (a_ == 0.0) return 0.0;
    if (y <= 0.0) return -kInf;
    return mode_ == CollusionMode::NonColluding ? -a_ / std::sqrt(y) : log_erfc(std::sqrt(b_ / y));
}

double EveSinrLaw::u_exponent(double u) const {
    return mode_ == CollusionMode::NonColluding ? a_ * u : b_ * u * u;
}

double density_gamma_e(double y, const SystemConfig& cfg, CollusionMode mode) {
    return EveSinrLaw(cfg, mode).density(y);
}

double log_mean_secrecy_rate(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                             const QuadratureOptions& opts) {
    const EveSinrLaw law(cfg, mode);
    if (gamma <= gamma_m) return -kInf;
    if (law.scale() == 0.0) return std::log(log_ratio(gamma, gamma_m));
    const auto t = mean_rate_terms(gamma, gamma_m, law, opts);
    return log_add_exp(t.head, t.spread);
}

double mean_secrecy_rate(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                         const QuadratureOptions& opts) {
    const EveSinrLaw law(cfg, mode);
    if (gamma <= gamma_m) return 0.0;
    if (law.scale() == 0.0) return log_ratio(gamma, gamma_m);
    const auto t = mean_rate_terms(gamma, gamma_m, law, opts);
    return std::exp(t.head) + std::exp(t.spread);
}

double mean_secrecy_rate_direct(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                                const QuadratureOptions& opts) {
    const EveSinrLaw law(cfg, mode);
    if (gamma <= gamma_m) return 0.0;
    const double o = law.survival(gamma);
    const double p = law.survival(gamma_m);
    const double head = ((1.0 - o) * std::log1p(gamma) - (1.0 - p) * std::log1p(gamma_m)) / std::numbers::ln2;
    if (law.scale() == 0.0) return head;

    double integral = 0.0;
    if (gamma_m < 1e-3) {
        // u = y^(-1/2), then s = u_gamma / u = sqrt(y / gamma) to land on a finite interval.
        const double ug = 1.0 / std::sqrt(gamma);
        const double a = law.scale();
        auto f = [&](double s) {
            if (s == 0.0) return 0.0;
            return std::log1p(gamma * s * s) / (s * s) / std::numbers::ln2 * a * ug * std::exp(-law.u_exponent(ug / s));
        };
        const double s_lo = std::sqrt(gamma_m / gamma);
        std::vector<double> breaks{s_lo, 1.0};
        for (double s = 0.5; s > s_lo && breaks.size() < 60; s *= 0.5) breaks.push_back(s);
        integral = integrate_pieces(f, breaks, opts, "mean secrecy rate (direct)").value;
    } else {
        auto f = [&](double y) { return std::log2(1.0 + y) * law.density(y); };
        std::vector<double> breaks{gamma_m, gamma};
        for (double y = 2.0 * gamma_m; y < gamma; y *= 2.0) breaks.push_back(y);
        integral = integrate_pieces(f, breaks, opts, "mean secrecy rate (direct)").value;
    }
    return head - integral;
}

double mean_secrecy_rate_ls(const SystemConfig& cfg, CollusionMode mode) {
    const auto s = large_system_sinr(cfg);
    return mean_secrecy_rate(s.gamma, s.gamma_m, cfg, mode);
}

RateLoss rate_loss_bound(const SystemConfig& cfg, CollusionMode mode) {
    const auto s = large_system_sinr(cfg);
    const double r_bcc = r_bcc_ls({cfg.network_load(), cfg.snr_linear(), cfg.regularization()});
    RateLoss out;
    out.delta_e = r_bcc - mean_secrecy_rate(s.gamma, s.gamma_m, cfg, mode);
    const double root_gap = std::max(std::sqrt(s.gamma) - std::sqrt(s.gamma_m), 0.0);
    out.nu = mu_constant(cfg) * (r_bcc / std::sqrt(s.gamma) + root_gap);
    out.delta_ub = out.nu * cfg.eavesdropper_density() / std::sqrt(double(cfg.n_antennas()));
    return out;
}

LargeSystemPoint large_system_point(const SystemConfig& cfg, CollusionMode mode) {
    require_eta_four(cfg, "large-system point");
    require_mean_rate_mode(mode, "large-system point");
    const auto s = large_system_sinr(cfg);
    LargeSystemPoint p;
    p.gamma_ls = s.gamma;
    p.gamma_m_ls = s.gamma_m;
    p.r_bcc_ls = r_bcc_ls({cfg.network_load(), cfg.snr_linear(), cfg.regularization()});
    p.outage_ls = outage(s.gamma, s.gamma_m, cfg, mode);
    p.p_ls = prob_eve_beats_malicious(s.gamma_m, cfg, mode);
    p.r_mean_ls = mean_secrecy_rate(s.gamma, s.gamma_m, cfg, mode);
    const auto loss = rate_loss_bound(cfg, mode);
    p.delta_e = loss.delta_e;
    p.delta_ub = loss.delta_ub;
    p.mu = mu_constant(cfg);
    p.nu = loss.nu;
    return p;
}

double nearest_distance_pdf(double x, double lambda_e) {
    if (!(x > 0.0)) return 0.0;
    return 2.0 * lambda_e * kPi * x * std::exp(-lambda_e * kPi * x * x);
}

double laplace_colluding(double s, const SystemConfig& cfg) {
    if (s < 0.0) throw ConfigError("Laplace argument must be nonnegative");
    const double eta = cfg.path_loss_exponent();
    const double scale = cfg.n_antennas() * cfg.network_load() * cfg.noise_power();
    const double d = 2.0 / eta;
    return std::exp(-kPi * cfg.eavesdropper_density() * std::pow(scale, -d) * gamma_fn(1.0 + d) *
                    gamma_fn(1.0 - d) * std::pow(s, d));
}

double laplace_colluding_eta4(double s, const SystemConfig& cfg) {
    require_eta_four(cfg, "eta = 4 Laplace transform");
    if (s < 0.0) throw ConfigError("Laplace argument must be nonnegative");
    const double scale = cfg.n_antennas() * cfg.network_load() * cfg.noise_power();
    return std::exp(-(kPi * kPi * cfg.eavesdropper_density() / 2.0) * std::sqrt(s / scale));
}

}  // namespace bcce
