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

#ifndef BCCE_RATES_HPP
#define BCCE_RATES_HPP

#include "bcce/types.hpp"

namespace bcce {

// All rates in bits/s/Hz.

/// [log2(1 + gamma) - log2(1 + gamma_m)]^+
double bcc_rate(double gamma, double gamma_m);

/// [log2(1 + gamma) - log2(1 + max(gamma_m, gamma_e))]^+
double bcce_rate(double gamma, double gamma_m, double gamma_e);

double sum_rate(const RVector& per_user);

/// 1 when the secrecy rate is zero: gamma <= gamma_m or gamma_e >= gamma (ties are outages).
int outage_indicator(double gamma, double gamma_m, double gamma_e);

/// Per-user BCCE rates of one SINR report.
RVector bcce_rates(const SinrReport& report);

}  // namespace bcce

#endif
