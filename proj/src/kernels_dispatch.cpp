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

#include "transduction/kernels.hpp"

#include "transduction/detail/kernel_variants.hpp"
#include "transduction/errors.hpp"

#include <cstdlib>
#include <initializer_list>
#include <string>

namespace transduction::kernels {

namespace {

void check_sizes(std::size_t n, std::initializer_list<std::size_t> sizes) {
    for (std::size_t s : sizes) {
        if (s != n) {
            throw DimensionError("kernel input spans must match the output length");
        }
    }
}

void require(Isa isa) {
    if (!isa_supported(isa)) {
        throw PreconditionError(std::string("kernel variant '") + to_string(isa) + "' is not available");
    }
}

}  // namespace

const char* to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) noexcept {
    if (isa == Isa::Scalar) {
        return true;
    }
#if defined(TRANSDUCTION_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() {
    const char* env = std::getenv("TRANSDUCTION_LAB_ISA");
    const std::string choice = env ? env : "";
    if (choice == "scalar") {
        return Isa::Scalar;
    }
    if (choice == "avx2") {
        return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }
    if (!choice.empty() && choice != "auto") {
        throw ConfigError("TRANSDUCTION_LAB_ISA must be scalar, avx2 or auto, got '" + choice + "'");
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void eta_resonant(std::span<const double> cg, std::span<const double> cnu, std::span<const double> zeta_o,
                  std::span<const double> zeta_e, std::span<double> out, Isa isa) {
    check_sizes(out.size(), {cg.size(), cnu.size(), zeta_o.size(), zeta_e.size()});
    require(isa);
#if defined(TRANSDUCTION_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::eta_resonant(cg.data(), cnu.data(), zeta_o.data(), zeta_e.data(), out.data(), out.size());
        return;
    }
#endif
    scalar::eta_resonant(cg.data(), cnu.data(), zeta_o.data(), zeta_e.data(), out.data(), out.size());
}

void eta_detuned(std::span<const double> cg, std::span<const double> cnu, std::span<const double> chi_o,
                 std::span<const double> chi_e, std::span<const double> zeta_o, std::span<const double> zeta_e,
                 std::span<double> out, Isa isa) {
    check_sizes(out.size(), {cg.size(), cnu.size(), chi_o.size(), chi_e.size(), zeta_o.size(), zeta_e.size()});
    require(isa);
#if defined(TRANSDUCTION_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::eta_detuned(cg.data(), cnu.data(), chi_o.data(), chi_e.data(), zeta_o.data(), zeta_e.data(),
                          out.data(), out.size());
        return;
    }
#endif
    scalar::eta_detuned(cg.data(), cnu.data(), chi_o.data(), chi_e.data(), zeta_o.data(), zeta_e.data(), out.data(),
                        out.size());
}

void eta_bandwidth(std::span<const double> cg, std::span<const double> cnu, std::span<const double> kappa_o,
                   std::span<const double> kappa_e, std::span<const double> omega, std::span<const double> zeta_o,
                   std::span<const double> zeta_e, std::span<double> out, Isa isa) {
    check_sizes(out.size(), {cg.size(), cnu.size(), kappa_o.size(), kappa_e.size(), omega.size(), zeta_o.size(),
                             zeta_e.size()});
    require(isa);
#if defined(TRANSDUCTION_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::eta_bandwidth(cg.data(), cnu.data(), kappa_o.data(), kappa_e.data(), omega.data(), zeta_o.data(),
                            zeta_e.data(), out.data(), out.size());
        return;
    }
#endif
    scalar::eta_bandwidth(cg.data(), cnu.data(), kappa_o.data(), kappa_e.data(), omega.data(), zeta_o.data(),
                          zeta_e.data(), out.data(), out.size());
}

void eta_beam_splitter(std::span<const double> c, std::span<const double> zeta_o, std::span<const double> zeta_e,
                       std::span<double> out, Isa isa) {
    check_sizes(out.size(), {c.size(), zeta_o.size(), zeta_e.size()});
    require(isa);
#if defined(TRANSDUCTION_HAVE_AVX2)
    if (isa == Isa::Avx2) {
        avx2::eta_beam_splitter(c.data(), zeta_o.data(), zeta_e.data(), out.data(), out.size());
        return;
    }
#endif
    scalar::eta_beam_splitter(c.data(), zeta_o.data(), zeta_e.data(), out.data(), out.size());
}

}  // namespace transduction::kernels
