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

#include "bcce/precoder.hpp"

#include <cmath>

#include "bcce/error.hpp"

namespace bcce {

PrecodeResult build_rci(const CMatrix& h, double xi, GramSide side) {
    if (!(xi > 0.0) || !std::isfinite(xi)) throw ConfigError("regularization must be positive");
    const Eigen::Index k = h.rows();
    const Eigen::Index n = h.cols();
    const double shift = static_cast<double>(n) * xi;

    if (side == GramSide::Automatic) side = k <= n ? GramSide::Users : GramSide::Antennas;

    CMatrix unnormalized;
    if (side == GramSide::Users) {
        CMatrix gram = h * h.adjoint();
        gram.diagonal().array() += shift;
        Eigen::LLT<CMatrix> llt(gram);
        if (llt.info() != Eigen::Success) throw NumericalError("Cholesky of H H^H + N xi I failed");
        // W^H = (H H^H + N xi I)^-1 H, Hermitian system.
        unnormalized = llt.solve(h).adjoint();
    } else {
        CMatrix gram = h.adjoint() * h;
        gram.diagonal().array() += shift;
        Eigen::LLT<CMatrix> llt(gram);
        if (llt.info() != Eigen::Success) throw NumericalError("Cholesky of H^H H + N xi I failed");
        unnormalized = llt.solve(h.adjoint());
    }

    // zeta = tr{H^H H (H^H H + N xi I)^-2} is exactly the squared Frobenius norm of the
    // unnormalized precoder.
    PrecodeResult out;
    out.zeta = unnormalized.squaredNorm();
    if (!(out.zeta > 0.0) || !std::isfinite(out.zeta)) throw NumericalError("degenerate RCI normalization");
    out.w = unnormalized / std::sqrt(out.zeta);
    return out;
}

}  // namespace bcce
