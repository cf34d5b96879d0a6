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

#ifndef BCCE_SINR_HPP
#define BCCE_SINR_HPP

#include <vector>

#include "bcce/config.hpp"
#include "bcce/precoder.hpp"
#include "bcce/types.hpp"

namespace bcce {

/// gamma_k = rho |h_k^H w_k|^2 / (1 + rho sum_{j != k} |h_k^H w_j|^2)
RVector legit_sinr(const CMatrix& h, const CMatrix& w, double rho);

/// gamma_M,k = rho ||H_k w_k||^2, H_k being H without row k. Zero when K = 1.
RVector malicious_sinr(const CMatrix& h, const CMatrix& w, double rho);

/// Eavesdropper SINR per user: max (NonColluding), sum (Colluding), or the closest point's
/// term (NearestOnly) of |h_e^H w_k|^2 / (||e||^eta sigma^2). Empty field gives zeros.
/// A nonzero field.tail_path_gain adds its mean-field contribution in Colluding mode.
RVector external_sinr(const EavesdropperField& field, const CMatrix& w, const SystemConfig& cfg,
                      CollusionMode mode);

inline RVector legit_sinr(const ChannelRealization& h, const PrecodeResult& w, const SystemConfig& cfg) {
    return legit_sinr(h.h, w.w, cfg.snr_linear());
}
inline RVector malicious_sinr(const ChannelRealization& h, const PrecodeResult& w, const SystemConfig& cfg) {
    return malicious_sinr(h.h, w.w, cfg.snr_linear());
}
inline RVector external_sinr(const EavesdropperField& field, const PrecodeResult& w, const SystemConfig& cfg,
                             CollusionMode mode) {
    return external_sinr(field, w.w, cfg, mode);
}

struct ExternalSinrAllModes {
    RVector noncolluding;
    RVector colluding;
    RVector nearest;

    const RVector& operator[](CollusionMode mode) const {
        return mode == CollusionMode::NonColluding ? noncolluding
               : mode == CollusionMode::Colluding  ? colluding
                                                   : nearest;
    }
};

/// The three modes from one pass over the field.
ExternalSinrAllModes external_sinr_all(const EavesdropperField& field, const CMatrix& w, const SystemConfig& cfg);

SinrReport sinr_report(const ChannelRealization& h, const PrecodeResult& w, const EavesdropperField& field,
                       const SystemConfig& cfg, CollusionMode mode);

/// Eavesdropper SINR for a single precoding direction over a ProjectedField.
double external_sinr(const ProjectedField& field, const SystemConfig& cfg, CollusionMode mode);

/// Precomputed, precoder-independent summary of a field, for evaluating external SINRs under
/// many candidate precoders (the regularization search). Results match external_sinr().
class ExternalSinrEvaluator {
public:
    /// max_candidates > 0 keeps only that many NonColluding points (largest bounds first).
    ExternalSinrEvaluator(const EavesdropperField& field, const SystemConfig& cfg, CollusionMode mode,
                          Eigen::Index max_candidates = 0);

    /// Writes gamma_E for every column of w. Returns false when a truncated list cannot rule out
    /// a dropped point; the values are then lower bounds.
    bool evaluate(const CMatrix& w, RVector& out) const;
    RVector operator()(const CMatrix& w) const;
    CollusionMode mode() const noexcept { return mode_; }

private:
    CollusionMode mode_;
    int n_antennas_;
    // Colluding: sum_e c_e h_e h_e^H (+ tail) with c_e = ||e||^-eta / sigma^2.
    CMatrix combined_;
    // NonColluding / NearestOnly: candidate points ordered by c_e ||h_e||^2, an upper bound
    // on their SINR for any unit-norm precoder.
    CMatrix candidates_;
    RVector path_gain_;
    RVector bound_;
    double dropped_bound_ = 0.0;
};

}  // namespace bcce

#endif
