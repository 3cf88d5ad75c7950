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

#include "doctest.h"
#include "support/oracles.hpp"

#include "transduction/errors.hpp"
#include "transduction/kernels.hpp"
#include "transduction/metrics.hpp"
#include "transduction/model.hpp"

#include <cstdlib>
#include <cstring>
#include <vector>

using namespace transduction;
namespace k = transduction::kernels;

namespace {

struct Inputs {
    std::vector<double> cg, cnu, chi_o, chi_e, ko, ke, w, zo, ze;
};

// Odd length so vector tails are exercised; includes unstable points.
Inputs random_inputs(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Inputs in;
    for (std::size_t i = 0; i < n; ++i) {
        in.cg.push_back(3.0 * u(rng));
        in.cnu.push_back(1.5 * u(rng));
        in.chi_o.push_back(2.0 * u(rng) - 1.0);
        in.chi_e.push_back(2.0 * u(rng) - 1.0);
        in.ko.push_back(0.5 + 100.0 * u(rng));
        in.ke.push_back(0.1 + u(rng));
        in.w.push_back(u(rng) - 0.5);
        in.zo.push_back(0.5 + 0.5 * u(rng));
        in.ze.push_back(0.5 + 0.5 * u(rng));
    }
    return in;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

std::vector<k::Isa> available() {
    std::vector<k::Isa> out{k::Isa::Scalar};
    if (k::isa_supported(k::Isa::Avx2)) {
        out.push_back(k::Isa::Avx2);
    }
    return out;
}

}  // namespace

TEST_CASE("resonant kernel matches the closed form") {
    const Inputs in = random_inputs(1001, 1);
    for (k::Isa isa : available()) {
        std::vector<double> out(in.cg.size());
        k::eta_resonant(in.cg, in.cnu, in.zo, in.ze, out, isa);
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (stability_check(in.cg[i], in.cnu[i])) {
                CHECK(out[i] == doctest::Approx(oracle::eta_resonant(in.cg[i], in.cnu[i], in.zo[i], in.ze[i])).epsilon(1e-14));
            } else {
                CHECK(std::isnan(out[i]));
            }
        }
    }
}

TEST_CASE("detuned and bandwidth kernels match the library closed forms") {
    const Inputs in = random_inputs(257, 2);
    for (k::Isa isa : available()) {
        std::vector<double> det(in.cg.size());
        std::vector<double> bw(in.cg.size());
        k::eta_detuned(in.cg, in.cnu, in.chi_o, in.chi_e, in.zo, in.ze, det, isa);
        k::eta_bandwidth(in.cg, in.cnu, in.ko, in.ke, in.w, in.zo, in.ze, bw, isa);
        for (std::size_t i = 0; i < det.size(); ++i) {
            if (std::isfinite(det[i])) {
                CHECK(det[i] == eta_detuned(in.cg[i], in.cnu[i], in.chi_o[i], in.chi_e[i], in.zo[i], in.ze[i]));
            }
            SystemParams p = SystemParams::from_cooperativities(in.cg[i], in.cnu[i], in.ko[i], in.ke[i]);
            p.zeta_o = in.zo[i];
            p.zeta_e = in.ze[i];
            if (stability_check(in.cg[i], in.cnu[i])) {
                CHECK(bw[i] == doctest::Approx(eta_bandwidth(p, in.w[i])).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("ISA variants agree bit for bit") {
    if (!k::isa_supported(k::Isa::Avx2)) {
        CHECK_THROWS_AS(k::eta_resonant({}, {}, {}, {}, {}, k::Isa::Avx2), PreconditionError);
        return;
    }
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 1023u}) {
        const Inputs in = random_inputs(n, 100 + n);
        std::vector<double> a(n), b(n);
        k::eta_resonant(in.cg, in.cnu, in.zo, in.ze, a, k::Isa::Scalar);
        k::eta_resonant(in.cg, in.cnu, in.zo, in.ze, b, k::Isa::Avx2);
        CHECK(same_bits(a, b));
        k::eta_detuned(in.cg, in.cnu, in.chi_o, in.chi_e, in.zo, in.ze, a, k::Isa::Scalar);
        k::eta_detuned(in.cg, in.cnu, in.chi_o, in.chi_e, in.zo, in.ze, b, k::Isa::Avx2);
        CHECK(same_bits(a, b));
        k::eta_bandwidth(in.cg, in.cnu, in.ko, in.ke, in.w, in.zo, in.ze, a, k::Isa::Scalar);
        k::eta_bandwidth(in.cg, in.cnu, in.ko, in.ke, in.w, in.zo, in.ze, b, k::Isa::Avx2);
        CHECK(same_bits(a, b));
        k::eta_beam_splitter(in.cg, in.zo, in.ze, a, k::Isa::Scalar);
        k::eta_beam_splitter(in.cg, in.zo, in.ze, b, k::Isa::Avx2);
        CHECK(same_bits(a, b));
    }
}

TEST_CASE("beam splitter kernel") {
    const std::vector<double> c{0.0, 1.0, 3.0};
    const std::vector<double> z{1.0, 1.0, 0.5};
    std::vector<double> out(3);
    k::eta_beam_splitter(c, z, z, out, k::Isa::Scalar);
    CHECK(out[0] == 0.0);
    CHECK(out[1] == 1.0);
    CHECK(out[2] == doctest::Approx(0.75 * 0.25));
}

TEST_CASE("kernel argument checks") {
    std::vector<double> a(4), b(3), out(4);
    CHECK_THROWS_AS(k::eta_resonant(a, b, a, a, out, k::Isa::Scalar), DimensionError);
    CHECK_THROWS_AS(k::eta_beam_splitter(a, a, a, b, k::Isa::Scalar), DimensionError);
}

TEST_CASE("ISA override from the environment") {
    ::setenv("TRANSDUCTION_LAB_ISA", "scalar", 1);
    CHECK(k::active_isa() == k::Isa::Scalar);
    ::setenv("TRANSDUCTION_LAB_ISA", "auto", 1);
    CHECK(k::isa_supported(k::active_isa()));
    ::setenv("TRANSDUCTION_LAB_ISA", "sse9", 1);
    CHECK_THROWS_AS(k::active_isa(), ConfigError);
    ::unsetenv("TRANSDUCTION_LAB_ISA");
    CHECK(k::isa_supported(k::active_isa()));
    CHECK(std::string(k::to_string(k::Isa::Avx2)) == "avx2");
}
