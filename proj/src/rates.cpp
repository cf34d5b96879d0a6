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

#include "bcce/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bcce {

double bcc_rate(double gamma, double gamma_m) {
    if (gamma <= gamma_m) return 0.0;
    return (std::log1p(gamma) - std::log1p(gamma_m)) / std::numbers::ln2;
}

double bcce_rate(double gamma, double gamma_m, double gamma_e) {
    return bcc_rate(gamma, std::max(gamma_m, gamma_e));
}

double sum_rate(const RVector& per_user) { return per_user.sum(); }

int outage_indicator(double gamma, double gamma_m, double gamma_e) {
    return (gamma <= gamma_m || gamma_e >= gamma) ? 1 : 0;
}

RVector bcce_rates(const SinrReport& report) {
    RVector out(report.legit.size());
    for (Eigen::Index k = 0; k < out.size(); ++k) {
        out[k] = bcce_rate(report.legit[k], report.malicious[k], report.external[k]);
    }
    return out;
}

}  // namespace bcce
