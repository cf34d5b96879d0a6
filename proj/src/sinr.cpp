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

#include "bcce/sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bcce/error.hpp"

namespace bcce {

namespace {

RVector path_gains(const RVector& distances, const SystemConfig& cfg) {
    const double eta = cfg.path_loss_exponent();
    const double inv_noise = cfg.snr_linear();
    RVector c(distances.size());
    for (Eigen::Index i = 0; i < distances.size(); ++i) {
        const double r = distances[i];
        if (!(r > 0.0)) throw ConfigError("eavesdropper at zero distance");
        c[i] = inv_noise * std::pow(r, -eta);
    }
    return c;
}

Eigen::Index nearest_index(const RVector& distances) {
    Eigen::Index idx = 0;
    distances.minCoeff(&idx);
    return idx;
}

}  // namespace

RVector legit_sinr(const CMatrix& h, const CMatrix& w, double rho) {
    const CMatrix g = h * w;  // g(k, j) = h_k^H w_j
    const Eigen::Index k = g.rows();
    RVector out(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double total = g.row(i).squaredNorm();
        const double useful = std::norm(g(i, i));
        const double interference = std::max(total - useful, 0.0);
        out[i] = rho * useful / (1.0 + rho * interference);
    }
    return out;
}

RVector malicious_sinr(const CMatrix& h, const CMatrix& w, double rho) {
    const CMatrix g = h * w;
    const Eigen::Index k = g.rows();
    RVector out(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        double leak = 0.0;
        for (Eigen::Index j = 0; j < k; ++j) {
            if (j != i) leak += std::norm(g(j, i));
        }
        out[i] = rho * leak;
    }
    return out;
}

RVector external_sinr(const EavesdropperField& field, const CMatrix& w, const SystemConfig& cfg,
                      CollusionMode mode) {
    const Eigen::Index k = w.cols();
    RVector out = RVector::Zero(k);
    if (mode == CollusionMode::Colluding && field.tail_path_gain > 0.0) {
        out = field.tail_path_gain * cfg.snr_linear() * w.colwise().squaredNorm().transpose();
    }
    if (field.empty()) return out;

    const RVector c = path_gains(field.distances, cfg);
    if (mode == CollusionMode::NearestOnly) {
        const Eigen::Index e = nearest_index(field.distances);
        const CVector z = w.adjoint() * field.channels.col(e);
        return c[e] * z.cwiseAbs2();
    }

    const CMatrix z = w.adjoint() * field.channels;  // z(k, e) = w_k^H h_e
    const Eigen::MatrixXd sinr = z.cwiseAbs2() * c.asDiagonal();
    if (mode == CollusionMode::NonColluding) return sinr.rowwise().maxCoeff();
    return out + sinr.rowwise().sum();
}

ExternalSinrAllModes external_sinr_all(const EavesdropperField& field, const CMatrix& w, const SystemConfig& cfg) {
    const Eigen::Index k = w.cols();
    ExternalSinrAllModes out;
    out.noncolluding = RVector::Zero(k);
    out.nearest = RVector::Zero(k);
    out.colluding = RVector::Zero(k);
    if (field.tail_path_gain > 0.0) {
        out.colluding = field.tail_path_gain * cfg.snr_linear() * w.colwise().squaredNorm().transpose();
    }
    if (field.empty()) return out;
    const RVector c = path_gains(field.distances, cfg);
    const CMatrix z = w.adjoint() * field.channels;
    const Eigen::MatrixXd sinr = z.cwiseAbs2() * c.asDiagonal();
    out.noncolluding = sinr.rowwise().maxCoeff();
    out.colluding += sinr.rowwise().sum();
    out.nearest = sinr.col(nearest_index(field.distances));
    return out;
}

double external_sinr(const ProjectedField& field, const SystemConfig& cfg, CollusionMode mode) {
    double tail = 0.0;
    if (mode == CollusionMode::Colluding && field.tail_path_gain > 0.0) {
        tail = field.tail_path_gain * cfg.snr_linear() * field.w_norm2;
    }
    if (field.size() == 0) return tail;
    const RVector c = path_gains(field.distances, cfg);
    switch (mode) {
        case CollusionMode::NonColluding: return c.cwiseProduct(field.gains).maxCoeff();
        case CollusionMode::Colluding: return tail + c.dot(field.gains);
        case CollusionMode::NearestOnly: {
            const Eigen::Index e = nearest_index(field.distances);
            return c[e] * field.gains[e];
        }
    }
    return 0.0;
}

SinrReport sinr_report(const ChannelRealization& h, const PrecodeResult& w, const EavesdropperField& field,
                       const SystemConfig& cfg, CollusionMode mode) {
    SinrReport r;
    r.legit = legit_sinr(h, w, cfg);
    r.malicious = malicious_sinr(h, w, cfg);
    r.external = external_sinr(field, w, cfg, mode);
    r.mode = mode;
    return r;
}

ExternalSinrEvaluator::ExternalSinrEvaluator(const EavesdropperField& field, const SystemConfig& cfg,
                                             CollusionMode mode, Eigen::Index max_candidates)
    : mode_(mode), n_antennas_(cfg.n_antennas()) {
    const RVector c = field.empty() ? RVector(0) : path_gains(field.distances, cfg);
    switch (mode) {
        case CollusionMode::Colluding: {
            combined_ = CMatrix::Zero(n_antennas_, n_antennas_);
            if (!field.empty()) {
                const CMatrix scaled = field.channels * c.cwiseSqrt().asDiagonal();
                combined_.noalias() = scaled * scaled.adjoint();
            }
            if (field.tail_path_gain > 0.0) {
                combined_.diagonal().array() += field.tail_path_gain * cfg.snr_linear();
            }
            break;
        }
        case CollusionMode::NearestOnly: {
            if (!field.empty()) {
                const Eigen::Index e = nearest_index(field.distances);
                candidates_ = field.channels.col(e);
                path_gain_ = RVector::Constant(1, c[e]);
                bound_ = RVector::Constant(1, c[e] * field.channels.col(e).squaredNorm());
            }
            break;
        }
        case CollusionMode::NonColluding: {
            if (field.empty()) break;
            const Eigen::Index m = field.size();
            RVector bound(m);
            for (Eigen::Index e = 0; e < m; ++e) bound[e] = c[e] * field.channels.col(e).squaredNorm();
            std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
            std::iota(order.begin(), order.end(), Eigen::Index{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](Eigen::Index a, Eigen::Index b) { return bound[a] > bound[b]; });
            const Eigen::Index kept = max_candidates > 0 ? std::min(m, max_candidates) : m;
            if (kept < m) dropped_bound_ = bound[order[static_cast<std::size_t>(kept)]];
            candidates_.resize(n_antennas_, kept);
            path_gain_.resize(kept);
            bound_.resize(kept);
            for (Eigen::Index i = 0; i < kept; ++i) {
                const Eigen::Index e = order[static_cast<std::size_t>(i)];
                candidates_.col(i) = field.channels.col(e);
                path_gain_[i] = c[e];
                bound_[i] = bound[e];
            }
            break;
        }
    }
}

bool ExternalSinrEvaluator::evaluate(const CMatrix& w, RVector& out) const {
    const Eigen::Index k = w.cols();
    if (mode_ == CollusionMode::Colluding) {
        const CMatrix aw = combined_ * w;
        out.resize(k);
        for (Eigen::Index i = 0; i < k; ++i) out[i] = std::max(w.col(i).dot(aw.col(i)).real(), 0.0);
        return true;
    }
    out = RVector::Zero(k);
    // ||w_k|| <= ||W||_F, so bound_ * ||W||_F^2 caps any point's SINR; stop once no user can improve.
    const double scale = w.squaredNorm();
    for (Eigen::Index e = 0; e < candidates_.cols(); ++e) {
        if (mode_ == CollusionMode::NonColluding && bound_[e] * scale <= out.minCoeff()) return true;
        const CVector z = w.adjoint() * candidates_.col(e);
        out = out.cwiseMax(path_gain_[e] * z.cwiseAbs2());
    }
    return dropped_bound_ * scale <= out.minCoeff();
}

RVector ExternalSinrEvaluator::operator()(const CMatrix& w) const {
    RVector out;
    if (!evaluate(w, out)) throw NumericalError("truncated eavesdropper list cannot certify the maximum");
    return out;
}

}  // namespace bcce
