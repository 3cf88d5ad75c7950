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

// Batch closed-form transmissivity kernels with runtime ISA dispatch.
//
// Every variant evaluates the expressions of detail/closed_forms.hpp in the
// same order without fused multiply-add, so all variants agree bit for bit.
// Nonpositive denominators produce NaN.

#include <span>

namespace transduction::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa) noexcept;

/// Whether the variant was built and the CPU can run it.
bool isa_supported(Isa isa) noexcept;

/// Best supported ISA, unless TRANSDUCTION_LAB_ISA is "scalar" or "avx2".
/// Throws ConfigError on any other non-empty value besides "auto".
Isa active_isa();

/// All spans must have the same length as `out` (DimensionError otherwise).
/// Requesting an unsupported ISA throws PreconditionError.
void eta_resonant(std::span<const double> cg, std::span<const double> cnu, std::span<const double> zeta_o,
                  std::span<const double> zeta_e, std::span<double> out, Isa isa);
void eta_detuned(std::span<const double> cg, std::span<const double> cnu, std::span<const double> chi_o,
                 std::span<const double> chi_e, std::span<const double> zeta_o, std::span<const double> zeta_e,
                 std::span<double> out, Isa isa);
void eta_bandwidth(std::span<const double> cg, std::span<const double> cnu, std::span<const double> kappa_o,
                   std::span<const double> kappa_e, std::span<const double> omega, std::span<const double> zeta_o,
                   std::span<const double> zeta_e, std::span<double> out, Isa isa);
void eta_beam_splitter(std::span<const double> c, std::span<const double> zeta_o, std::span<const double> zeta_e,
                       std::span<double> out, Isa isa);

}  // namespace transduction::kernels
