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

#ifndef BCCE_SRC_QUADRATURE_HPP
#define BCCE_SRC_QUADRATURE_HPP

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace bcce::detail {

struct Segment {
    double value = 0.0;
    double error = 0.0;
};

// 15-point Gauss embedded in 31-point Kronrod on [a, b]. Node tables from Boost; the
// adaptive driver is local because the Boost 1.74 recursion compares an unscaled
// error against a scaled tolerance and never terminates on short intervals.
template <typename F>
Segment gk31(F& f, double a, double b) {
    using K = boost::math::quadrature::gauss_kronrod<double, 31>;
    using G = boost::math::quadrature::gauss<double, 15>;
    const auto& kx = K::abscissa();
    const auto& kw = K::weights();
    const auto& gw = G::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = f(c);
    double kr = f0 * kw[0];
    double ga = f0 * gw[0];
    for (std::size_t i = 1; i < kx.size(); ++i) {
        const double s = f(c + h * kx[i]) + f(c - h * kx[i]);
        kr += s * kw[i];
        if (i % 2 == 0) ga += s * gw[i / 2];
    }
    return {h * kr, std::max(std::abs(h * (kr - ga)), 4e-16 * std::abs(h * kr))};
}

template <typename F>
Segment adaptive_gk(F& f, double a, double b, double abs_tol, unsigned depth) {
    const Segment s = gk31(f, a, b);
    if (s.error <= abs_tol || depth == 0) return s;
    const double m = 0.5 * (a + b);
    const Segment l = adaptive_gk(f, a, m, 0.5 * abs_tol, depth - 1);
    const Segment r = adaptive_gk(f, m, b, 0.5 * abs_tol, depth - 1);
    return {l.value + r.value, l.error + r.error};
}

/// Adaptive Gauss-Kronrod to max(rel_tol * |I|, abs_floor), with |I| taken from a first pass.
template <typename F>
Segment integrate(F&& f, double a, double b, double rel_tol, double abs_floor, unsigned max_depth) {
    if (!(b > a)) return {};
    const Segment first = gk31(f, a, b);
    const double tol = std::max(rel_tol * std::abs(first.value), abs_floor);
    if (first.error <= tol) return first;
    return adaptive_gk(f, a, b, tol, max_depth);
}

}  // namespace bcce::detail

#endif
