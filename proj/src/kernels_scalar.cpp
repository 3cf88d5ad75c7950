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

#include "transduction/detail/closed_forms.hpp"
#include "transduction/detail/kernel_variants.hpp"

namespace transduction::kernels::scalar {

void eta_resonant(const double* cg, const double* cnu, const double* zo, const double* ze, double* out,
                  std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::eta_resonant(cg[i], cnu[i], zo[i], ze[i]);
    }
}

void eta_detuned(const double* cg, const double* cnu, const double* xo, const double* xe, const double* zo,
                 const double* ze, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::eta_detuned(cg[i], cnu[i], xo[i], xe[i], zo[i], ze[i]);
    }
}

void eta_bandwidth(const double* cg, const double* cnu, const double* ko, const double* ke, const double* w,
                   const double* zo, const double* ze, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::eta_bandwidth(cg[i], cnu[i], ko[i], ke[i], w[i], zo[i], ze[i]);
    }
}

void eta_beam_splitter(const double* c, const double* zo, const double* ze, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = detail::eta_beam_splitter(c[i], zo[i], ze[i]);
    }
}

}  // namespace transduction::kernels::scalar
