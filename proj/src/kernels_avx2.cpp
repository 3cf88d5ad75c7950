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

// Built with -mavx2 only; never include inline helpers shared with other
// translation units here. Tails are delegated to the scalar variant.

#include "transduction/detail/kernel_variants.hpp"

#include <immintrin.h>

#include <limits>

namespace transduction::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

inline __m256d ld(const double* p) { return _mm256_loadu_pd(p); }
inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline __m256d guarded_div(__m256d num, __m256d den) {
    const __m256d positive = _mm256_cmp_pd(den, _mm256_setzero_pd(), _CMP_GT_OQ);
    const __m256d nan = splat(std::numeric_limits<double>::quiet_NaN());
    return _mm256_blendv_pd(nan, _mm256_div_pd(num, den), positive);
}

inline __m256d numerator(__m256d c, __m256d zo, __m256d ze) {
    return _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(splat(4.0), c), zo), ze);
}

}  // namespace

void eta_resonant(const double* cg, const double* cnu, const double* zo, const double* ze, double* out,
                  std::size_t n) {
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d c = ld(cg + i);
        const __m256d one_c = _mm256_add_pd(splat(1.0), c);
        const __m256d den = _mm256_sub_pd(_mm256_mul_pd(one_c, one_c), _mm256_mul_pd(splat(4.0), ld(cnu + i)));
        _mm256_storeu_pd(out + i, guarded_div(numerator(c, ld(zo + i), ld(ze + i)), den));
    }
    scalar::eta_resonant(cg + body, cnu + body, zo + body, ze + body, out + body, n - body);
}

void eta_detuned(const double* cg, const double* cnu, const double* xo, const double* xe, const double* zo,
                 const double* ze, double* out, std::size_t n) {
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d c = ld(cg + i);
        const __m256d o = ld(xo + i);
        const __m256d e = ld(xe + i);
        const __m256d cross = _mm256_mul_pd(c, _mm256_add_pd(splat(2.0), _mm256_mul_pd(_mm256_mul_pd(splat(8.0), e), o)));
        const __m256d left = _mm256_add_pd(_mm256_sub_pd(splat(1.0), _mm256_mul_pd(splat(4.0), ld(cnu + i))),
                                           _mm256_mul_pd(_mm256_mul_pd(splat(4.0), e), e));
        const __m256d right = _mm256_add_pd(splat(1.0), _mm256_mul_pd(_mm256_mul_pd(splat(4.0), o), o));
        const __m256d den = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(c, c), cross), _mm256_mul_pd(left, right));
        _mm256_storeu_pd(out + i, guarded_div(numerator(c, ld(zo + i), ld(ze + i)), den));
    }
    scalar::eta_detuned(cg + body, cnu + body, xo + body, xe + body, zo + body, ze + body, out + body, n - body);
}

void eta_bandwidth(const double* cg, const double* cnu, const double* ko, const double* ke, const double* w,
                   const double* zo, const double* ze, double* out, std::size_t n) {
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d c = ld(cg + i);
        const __m256d nu4 = _mm256_mul_pd(splat(4.0), ld(cnu + i));
        const __m256d vko = ld(ko + i);
        const __m256d vke = ld(ke + i);
        const __m256d vw = ld(w + i);
        const __m256d ke2 = _mm256_mul_pd(vke, vke);
        const __m256d ko2 = _mm256_mul_pd(vko, vko);
        const __m256d kk = _mm256_mul_pd(ke2, ko2);
        const __m256d w2 = _mm256_mul_pd(vw, vw);
        const __m256d num = _mm256_mul_pd(
            _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(splat(4.0), c), kk), ld(zo + i)), ld(ze + i));
        const __m256d one_c = _mm256_add_pd(splat(1.0), c);
        const __m256d t0 = _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(one_c, one_c), nu4), kk);
        const __m256d inner = _mm256_sub_pd(_mm256_mul_pd(_mm256_sub_pd(splat(1.0), nu4), ke2),
                                            _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(splat(2.0), c), vke), vko));
        const __m256d t1 = _mm256_mul_pd(_mm256_mul_pd(splat(4.0), _mm256_add_pd(inner, ko2)), w2);
        const __m256d t2 = _mm256_mul_pd(_mm256_mul_pd(splat(16.0), w2), w2);
        const __m256d den = _mm256_add_pd(_mm256_add_pd(t0, t1), t2);
        _mm256_storeu_pd(out + i, guarded_div(num, den));
    }
    scalar::eta_bandwidth(cg + body, cnu + body, ko + body, ke + body, w + body, zo + body, ze + body, out + body,
                          n - body);
}

void eta_beam_splitter(const double* c, const double* zo, const double* ze, double* out, std::size_t n) {
    const std::size_t body = n - n % kLanes;
    for (std::size_t i = 0; i < body; i += kLanes) {
        const __m256d vc = ld(c + i);
        const __m256d one_c = _mm256_add_pd(splat(1.0), vc);
        _mm256_storeu_pd(out + i, guarded_div(numerator(vc, ld(zo + i), ld(ze + i)), _mm256_mul_pd(one_c, one_c)));
    }
    scalar::eta_beam_splitter(c + body, zo + body, ze + body, out + body, n - body);
}

}  // namespace transduction::kernels::avx2
