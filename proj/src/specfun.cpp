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

#include "bcce/specfun.hpp"

#include <cmath>
#include <numbers>

#include "bcce/error.hpp"

namespace bcce {

namespace {

constexpr double kAsymptoticFrom = 20.0;

// Sum_{n>=0} (-1)^n (2n-1)!! / (2x^2)^n, the bracket of the large-x erfc expansion.
double erfc_asymptotic_series(double x) {
    const double inv = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 8; ++n) {
        term *= -(2.0 * n - 1.0) * inv;
        sum += term;
    }
    return sum;
}

}  // namespace

double gamma_fn(double z) {
    if (!(z > 0.0)) throw ConfigError("gamma_fn is defined here for z > 0 only");
    return std::tgamma(z);
}

double erfc_fn(double x) { return std::erfc(x); }

double q_fn(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_erfc(double x) {
    if (x < kAsymptoticFrom) return std::log(std::erfc(x));
    return -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log(erfc_asymptotic_series(x));
}

double erfcx(double x) {
    if (x < kAsymptoticFrom) return std::exp(x * x) * std::erfc(x);
    return erfc_asymptotic_series(x) / (x * std::sqrt(std::numbers::pi));
}

}  // namespace bcce
