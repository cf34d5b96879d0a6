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

#include "bcce/asymptotics.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>

#include "bcce/error.hpp"

namespace bcce {

namespace {

void check_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(name) + " must be a positive finite number");
    }
}

// Neumaier summation in extended precision.
long double compensated_sum(std::initializer_list<long double> terms) {
    long double sum = 0.0L;
    long double carry = 0.0L;
    for (const long double t : terms) {
        const long double s = sum + t;
        if (std::fabs(sum) >= std::fabs(t)) {
            carry += (sum - s) + t;
        } else {
            carry += (t - s) + sum;
        }
        sum = s;
    }
    return sum + carry;
}

}  // namespace

double g_function(double beta, double xi) {
    check_positive(beta, "beta");
    check_positive(xi, "xi");
    const double a = (1.0 - beta) / xi;
    const double root = std::sqrt(a * a + 2.0 * (1.0 + beta) / xi + 1.0);
    const double t = a - 1.0;
    if (t >= 0.0) return 0.5 * (root + t);
    // root + t cancels when beta > 1 and xi is small; root^2 - t^2 = 4 / xi.
    return 2.0 / (xi * (root - t));
}

LargeSystemSinr gamma_ls(const AsymptoticInputs& in) {
    check_positive(in.rho, "rho");
    const double g = g_function(in.beta, in.xi);
    const double q = (1.0 + g) * (1.0 + g);
    const double gamma = g * (in.rho + in.rho * in.xi / in.beta * q) / (in.rho + q);
    return {gamma, in.rho / q};
}

double r_bcc_ls(const AsymptoticInputs& in) {
    const auto s = gamma_ls(in);
    const double r = (std::log1p(s.gamma) - std::log1p(s.gamma_m)) / std::numbers::ln2;
    return r > 0.0 ? r : 0.0;
}

double xi_bcc_opt(double beta, double rho) {
    check_positive(beta, "beta");
    check_positive(rho, "rho");
    const long double b = beta;
    const long double p = rho;
    const long double omb = 1.0L - b;

    // beta^2 (rho^2 + rho + 1) - 2 beta rho (rho - 1) + rho^2, regrouped into nonnegative terms.
    long double disc = compensated_sum({p * p * omb * omb, b * b * p, b * b, 2.0L * b * p});
    if (disc < 0.0L && disc > -1e-14L) disc = 0.0L;
    const long double root = std::sqrt(disc);

    const long double num = compensated_sum({-2.0L * p * p * omb * omb, 6.0L * p * b, 2.0L * b * b,
                                             -2.0L * (b * (p + 1.0L) - p) * root});
    const long double den = 6.0L * p * p * (b + 2.0L) + 6.0L * p * b;
    return static_cast<double>(num / den);
}

double xi_bc_opt(double beta, double rho) {
    check_positive(beta, "beta");
    check_positive(rho, "rho");
    return beta / rho;
}

}  // namespace bcce
