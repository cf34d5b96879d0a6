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

#ifndef BCCE_PRECODER_HPP
#define BCCE_PRECODER_HPP

#include "bcce/config.hpp"
#include "bcce/types.hpp"

namespace bcce {

/// Regularized channel inversion precoder W (N x K), normalized to ||W||_F^2 = 1.
struct PrecodeResult {
    CMatrix w;
    double zeta = 0.0;  ///< tr{H^H H (H^H H + N xi I)^-2}

    auto column(int k) const { return w.col(k); }
};

/// Which Gram matrix is factorized. Both give the same W up to rounding.
enum class GramSide {
    Automatic,  ///< the smaller of the two
    Users,      ///< H^H (H H^H + N xi I_K)^-1
    Antennas,   ///< (H^H H + N xi I_N)^-1 H^H
};

/// W = H^H (H H^H + N xi I_K)^-1 / sqrt(zeta), via a Hermitian Cholesky solve.
/// Throws NumericalError when the factorization fails.
PrecodeResult build_rci(const CMatrix& h, double xi, GramSide side = GramSide::Automatic);

inline PrecodeResult build_rci(const ChannelRealization& h, const SystemConfig& cfg,
                               GramSide side = GramSide::Automatic) {
    return build_rci(h.h, cfg.regularization(), side);
}

}  // namespace bcce

#endif
