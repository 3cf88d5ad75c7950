/**
 * Copyright 2026 The transduction-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Element-wise closed-form transmissivities. The batch kernels (scalar and
// AVX2) must evaluate exactly these expressions in exactly this order; a
// nonpositive denominator yields NaN.

#include <limits>

namespace transduction::detail {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline double eta_resonant(double cg, double cnu, double zo, double ze) {
    const double num = ((4.0 * cg) * zo) * ze;
    const double den = (1.0 + cg) * (1.0 + cg) - 4.0 * cnu;
    return den > 0.0 ? num / den : kNaN;
}

inline double eta_detuned(double cg, double cnu, double xo, double xe, double zo, double ze) {
    const double num = ((4.0 * cg) * zo) * ze;
    const double cross = cg * (2.0 + (8.0 * xe) * xo);
    const double left = (1.0 - 4.0 * cnu) + (4.0 * xe) * xe;
    const double right = 1.0 + (4.0 * xo) * xo;
    const double den = (cg * cg + cross) + left * right;
    return den > 0.0 ? num / den : kNaN;
}

inline double eta_bandwidth(double cg, double cnu, double ko, double ke, double w, double zo, double ze) {
    const double ke2 = ke * ke;
    const double ko2 = ko * ko;
    const double kk = ke2 * ko2;
    const double w2 = w * w;
    const double num = ((((4.0 * cg) * kk)) * zo) * ze;
    const double t0 = ((1.0 + cg) * (1.0 + cg) - 4.0 * cnu) * kk;
    const double t1 = (4.0 * (((1.0 - 4.0 * cnu) * ke2 - ((2.0 * cg) * ke) * ko) + ko2)) * w2;
    const double t2 = (16.0 * w2) * w2;
    const double den = (t0 + t1) + t2;
    return den > 0.0 ? num / den : kNaN;
}

inline double eta_beam_splitter(double c, double zo, double ze) {
    const double num = ((4.0 * c) * zo) * ze;
    const double den = (1.0 + c) * (1.0 + c);
    return den > 0.0 ? num / den : kNaN;
}

}  // namespace transduction::detail
