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

#ifndef BCCE_ASYMPTOTICS_HPP
#define BCCE_ASYMPTOTICS_HPP

namespace bcce {

/// Load, SNR and regularization of a large-system operating point. All strictly positive.
struct AsymptoticInputs {
    double beta;
    double rho;
    double xi;
};

/// Deterministic equivalents of the legitimate and malicious-alliance SINRs.
struct LargeSystemSinr {
    double gamma;    ///< legitimate user
    double gamma_m;  ///< alliance of the other K-1 users
};

/// Stieltjes-type fixed point g(beta, xi) of the RCI large-system analysis. Always >= 0.
double g_function(double beta, double xi);

LargeSystemSinr gamma_ls(const AsymptoticInputs& in);

/// Large-system secrecy rate of the confidential broadcast channel, bits/s/Hz.
double r_bcc_ls(const AsymptoticInputs& in);

/// Closed-form xi maximizing r_bcc_ls() at fixed (beta, rho).
double xi_bcc_opt(double beta, double rho);

/// Sum-rate optimal xi without secrecy constraints, beta / rho.
double xi_bc_opt(double beta, double rho);

}  // namespace bcce

#endif
