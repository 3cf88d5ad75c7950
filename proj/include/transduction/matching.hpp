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

// Half impedance matching: resonant quadrature relations, detection of the
// canonical half-matched form, and the local squeezer plans that turn it into
// a perfect channel.

#include "transduction/model.hpp"

#include <array>
#include <optional>

namespace transduction {

enum class ReflectionBranch { None, X, P, Both };

const char* to_string(ReflectionBranch b) noexcept;

/// Resonant, unit-extraction relations between the microwave output and the
/// inputs, in the frame where the pump phase is -pi/2:
///   x_b_out = xb_from_pa * p_a_in + xb_reflection * x_b_in
///   p_b_out = pb_from_xa * x_a_in + pb_reflection * p_b_in
struct QuadratureRelations {
    double r = 1.0;
    double xb_from_pa = 0.0;
    double xb_reflection = 0.0;
    double pb_from_xa = 0.0;
    double pb_reflection = 0.0;
    /// Which reflection coefficient vanishes (|c| < 1e-12).
    ReflectionBranch reflectionless = ReflectionBranch::None;
};

inline constexpr double kReflectionlessTolerance = 1e-12;

/// Throws StabilityError when Cnu >= (1+Cg)^2/4.
QuadratureRelations quadrature_relations(double cg, double cnu);

/// Pump phase at which the model's quadratures line up with quadrature_relations.
inline constexpr double kMatchingPumpPhase = -M_PI / 2.0;

/// Per-mode quarter-turn frame on (a_in, b_in, a_out, b_out); entries count
/// quarter turns in {0, 1, 2, 3}.
struct QuarterTurnFrame {
    std::array<int, 4> turns{};

    RealMatrix input_rotation() const;
    RealMatrix output_rotation() const;
    /// R_out S R_in^T.
    RealMatrix apply(const RealMatrix& s) const;
};

/// Canonical form reached in `frame` (rows and columns ordered a, b):
///   x_b_out = xi x_a_in + gamma x_b_in      p_b_out = p_a_in / xi
///   x_a_out = mu x_b_in                     p_a_out = p_b_in / mu + gamma_a p_a_in
/// with gamma_a = -gamma / (xi mu) by symplecticity. The textbook form has mu = 1/xi.
struct HalfMatchedForm {
    double xi = 0.0;
    double gamma = 0.0;
    double mu = 0.0;
    double gamma_a = 0.0;
    QuarterTurnFrame frame;
    RealMatrix canonical;
};

/// Searches all 256 quarter-turn frames for the canonical form, first match in
/// lexicographic order of turns. Throws PreconditionError if `s` (4x4, ports
/// a then b) is not symplectic.
std::optional<HalfMatchedForm> detect_half_matched(const QuadratureMatrix& s, double tol = kDefaultTolerance);

/// The a/b coupling-port block of the 8x8 model matrix.
QuadratureMatrix coupling_block(const QuadratureMatrix& s_x);

/// x-quadrature scale factors of local squeezers (p scales by the inverse),
/// applied in the canonical frame.
struct SqueezerPlan {
    double input_a = 1.0;
    double input_b = 1.0;
    double output_a = 1.0;
    double output_b = 1.0;

    RealMatrix encoder() const;
    RealMatrix decoder() const;
};

/// Squeezes a on the way in and b on the way out so the a -> b map is the
/// identity. Residual noise variance (gamma / (xi s))^2 on one quadrature.
/// Throws PreconditionError for s < 1.
SqueezerPlan perfect_transduction_plan(const HalfMatchedForm& f, double s = 1.0);

/// One encoder/decoder assignment that makes both directions perfect.
/// `u` is the b-input x scale (defaults to 1/s).
SqueezerPlan two_way_plan(const HalfMatchedForm& f, double s = 1.0, std::optional<double> u = std::nullopt);

struct ComposedChannels {
    GaussianChannel a_to_b;
    GaussianChannel b_to_a;
};

/// Channels of decoder * S * encoder with vacuum on the unused inputs;
/// `s_canonical` is the 4x4 matrix in the plan's frame.
ComposedChannels compose(const RealMatrix& s_canonical, const SqueezerPlan& plan);

}  // namespace transduction
