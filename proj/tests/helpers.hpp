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

#ifndef BCCE_TESTS_HELPERS_HPP
#define BCCE_TESTS_HELPERS_HPP

#include "bcce/config.hpp"

inline bcce::SystemConfig make_cfg(long n, double beta, double snr_db, double lambda_e = 0.1,
                                   double xi = 0.0273, double eta = 4.0, std::uint64_t seed = 1) {
    bcce::RawConfig r;
    r.n_antennas = n;
    r.network_load = beta;
    r.snr_db = snr_db;
    r.eavesdropper_density = lambda_e;
    r.regularization = xi;
    r.path_loss_exponent = eta;
    r.seed = seed;
    return bcce::validate_config(r);
}

#endif
