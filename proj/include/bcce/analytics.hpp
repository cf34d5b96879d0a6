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

#ifndef BCCE_ANALYTICS_HPP
#define BCCE_ANALYTICS_HPP

#include "bcce/asymptotics.hpp"
#include "bcce/config.hpp"
#include "bcce/types.hpp"

namespace bcce {

/// mu = pi^(3/2) / (2 sqrt(beta sigma^2)), recurring prefactor of every eta = 4 closed form.
double mu_constant(double beta, double noise_power);
double mu_constant(const SystemConfig& cfg);

/// Large-system SINRs at cfg's (beta, rho, xi).
LargeSystemSinr large_system_sinr(const SystemConfig& cfg);

// ---- secrecy outage ----------------------------------------------------------------------
//
// Each returns 1 when gamma <= gamma_m, and otherwise P(gamma_E >= gamma) over the PPP.
// The *_ls variants substitute the large-system SINRs of cfg.

/// Strongest-eavesdropper outage; any eta > 2.
double outage_noncolluding(double gamma, double gamma_m, const SystemConfig& cfg);
double outage_noncolluding_ls(const SystemConfig& cfg);

/// Nearest-eavesdropper outage; eta = 4 only (UnsupportedClosedForm otherwise).
double outage_nearest(double gamma, double gamma_m, const SystemConfig& cfg);

struct NearestOutageLs {
    /// mu lambda / sqrt(N) (1 + mu^2 lambda^2 / (pi N)) (1 - 2 mu lambda / (pi sqrt(N))), the small-density expansion.
    double verbatim = 0.0;
    /// outage_nearest() evaluated at the large-system SINRs.
    double at_gamma_ls = 0.0;
};
NearestOutageLs outage_nearest_ls(const SystemConfig& cfg);

/// MRC-combined eavesdropper outage; eta = 4 only.
double outage_colluding(double gamma, double gamma_m, const SystemConfig& cfg);
double outage_colluding_ls(const SystemConfig& cfg);

/// Dispatch on mode. NearestOnly uses outage_nearest().
double outage(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode);
double outage_ls(const SystemConfig& cfg, CollusionMode mode);

/// Smallest integer N with N > (mu lambda / (eps sqrt(gamma_ls)))^2.
long min_antennas(double eps, double lambda_e, double beta, double noise_power, double gamma_ls);
double min_antennas_bound(double eps, double lambda_e, double beta, double noise_power, double gamma_ls);

/// P(gamma_E >= gamma_m); eta = 4, NonColluding or Colluding. Returns 1 for gamma_m = 0.
double prob_eve_beats_malicious(double gamma_m, const SystemConfig& cfg, CollusionMode mode);

// ---- eavesdropper SINR law (eta = 4) --------------------------------------------------------

/// Distribution of gamma_E for one user over the PPP, NonColluding (Frechet type) or
/// Colluding (Levy). With a = mu lambda / sqrt(N), u = gamma_E^(-1/2) is Exp(a) in the
/// NonColluding case and half-normal with density a exp(-pi a^2 u^2 / 4) when Colluding.
class EveSinrLaw {
public:
    EveSinrLaw(const SystemConfig& cfg, CollusionMode mode);

    CollusionMode mode() const noexcept { return mode_; }
    double mu() const noexcept { return mu_; }
    /// a = mu lambda / sqrt(N)
    double scale() const noexcept { return a_; }

    /// f(y), y > 0.
    double density(double y) const;
    /// P(gamma_E < y)
    double cdf(double y) const;
    /// P(gamma_E >= y)
    double survival(double y) const;
    double log_cdf(double y) const;

    /// Exponent phi(u) of the u-domain density a exp(-phi(u)).
    double u_exponent(double u) const;

private:
    CollusionMode mode_;
    double mu_;
    double a_;
    double b_;  // pi a^2 / 4, Colluding only
};

double density_gamma_e(double y, const SystemConfig& cfg, CollusionMode mode);

// ---- mean secrecy rate ---------------------------------------------------------------------

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_floor = 1e-14;
    unsigned max_depth = 18;
};

/// E_PPP[R_k] for fixed (gamma, gamma_m); eta = 4, NonColluding or Colluding.
/// Evaluated as  F(gamma_m) log2((1+gamma)/(1+gamma_m)) + int_{gamma_m}^{gamma} log2((1+gamma)/(1+y)) f(y) dy
/// in the u = y^(-1/2) domain. Throws QuadratureError if the tolerance is not met.
double mean_secrecy_rate(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                         const QuadratureOptions& opts = {});

/// log of mean_secrecy_rate(), finite even where the rate underflows (dense eavesdroppers).
/// Returns -inf when gamma <= gamma_m.
double log_mean_secrecy_rate(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                             const QuadratureOptions& opts = {});

/// The same mean written as log2[(1+gamma)^(1-O) / (1+gamma_m)^(1-P)] - int log2(1+y) f(y) dy,
/// integrated in y directly. Independent second route for cross-checking.
double mean_secrecy_rate_direct(double gamma, double gamma_m, const SystemConfig& cfg, CollusionMode mode,
                                const QuadratureOptions& opts = {});

double mean_secrecy_rate_ls(const SystemConfig& cfg, CollusionMode mode);

struct RateLoss {
    double delta_e = 0.0;   ///< R_BCC_ls - R_ls
    double delta_ub = 0.0;  ///< nu lambda / sqrt(N)
    double nu = 0.0;
};
RateLoss rate_loss_bound(const SystemConfig& cfg, CollusionMode mode);

/// All large-system closed forms for cfg. NonColluding or Colluding, eta = 4.
LargeSystemPoint large_system_point(const SystemConfig& cfg, CollusionMode mode);

// ---- geometry and transforms ---------------------------------------------------------------

/// Density of the distance to the nearest PPP point, 2 lambda pi x exp(-lambda pi x^2).
double nearest_distance_pdf(double x, double lambda_e);

/// E[exp(-s gamma_E)] for colluding eavesdroppers, any eta > 2.
double laplace_colluding(double s, const SystemConfig& cfg);
/// eta = 4 reduction exp(-(pi^2 lambda / 2) sqrt(s / (N beta sigma^2))).
double laplace_colluding_eta4(double s, const SystemConfig& cfg);

}  // namespace bcce

#endif
