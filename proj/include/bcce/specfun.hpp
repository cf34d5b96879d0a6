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

#ifndef BCCE_SPECFUN_HPP
#define BCCE_SPECFUN_HPP

namespace bcce {

/// Gamma function for z > 0.
double gamma_fn(double z);

double erfc_fn(double x);

/// Gaussian tail, Q(x) = erfc(x / sqrt 2) / 2.
double q_fn(double x);

/// log(erfc(x)), finite far past the point where erfc underflows.
double log_erfc(double x);

/// Scaled complement exp(x^2) erfc(x).
double erfcx(double x);

}  // namespace bcce

#endif
