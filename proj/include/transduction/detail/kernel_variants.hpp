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

// Raw-pointer entry points of the individual kernel variants.

#include <cstddef>

namespace transduction::kernels {

#define TRANSDUCTION_KERNEL_SET(ns)                                                                        \
    namespace ns {                                                                                         \
    void eta_resonant(const double* cg, const double* cnu, const double* zo, const double* ze, double* out, \
                      std::size_t n);                                                                      \
    void eta_detuned(const double* cg, const double* cnu, const double* xo, const double* xe,              \
                     const double* zo, const double* ze, double* out, std::size_t n);                      \
    void eta_bandwidth(const double* cg, const double* cnu, const double* ko, const double* ke,            \
                       const double* w, const double* zo, const double* ze, double* out, std::size_t n);   \
    void eta_beam_splitter(const double* c, const double* zo, const double* ze, double* out,              \
                           std::size_t n);                                                                 \
    }

TRANSDUCTION_KERNEL_SET(scalar)
#if defined(TRANSDUCTION_HAVE_AVX2)
TRANSDUCTION_KERNEL_SET(avx2)
#endif

#undef TRANSDUCTION_KERNEL_SET

}  // namespace transduction::kernels
