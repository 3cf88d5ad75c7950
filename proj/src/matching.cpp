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

#include "transduction/matching.hpp"

#include "transduction/errors.hpp"
#include "transduction/metrics.hpp"

#include <cmath>

namespace transduction {

namespace {

struct Cell {
    int row;
    int col;
};

// Entries that vanish in the canonical form.
constexpr Cell kZeros[] = {{0, 0}, {0, 1}, {0, 3}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {3, 2}, {3, 3}};

RealMatrix two_mode(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) { return direct_sum({a, b}); }

Eigen::Matrix2d quarter_turns(int k) { return rotation(k * M_PI / 2.0); }

}  // namespace

const char* to_string(ReflectionBranch b) noexcept {
    switch (b) {
        case ReflectionBranch::X:
            return "x";
        case ReflectionBranch::P:
            return "p";
        case ReflectionBranch::Both:
            return "both";
        case ReflectionBranch::None:
            break;
    }
    return "none";
}

QuadratureRelations quadrature_relations(double cg, double cnu) {
    if (cg < 0.0 || cnu < 0.0) {
        throw PreconditionError("quadrature_relations needs nonnegative cooperativities");
    }
    if (!stability_check(cg, cnu)) {
        throw StabilityError("unstable: Cnu = " + std::to_string(cnu) + " >= (1+Cg)^2/4");
    }
    const double s = 2.0 * std::sqrt(cnu);
    QuadratureRelations q;
    q.r = (1.0 + cg + s) / (1.0 + cg - s);
    const double root = std::sqrt(cg);
    q.xb_from_pa = root * (1.0 + q.r) / (1.0 + cg);
    q.xb_reflection = (q.r - cg) / (1.0 + cg);
    q.pb_from_xa = -root * (1.0 + 1.0 / q.r) / (1.0 + cg);
    q.pb_reflection = (1.0 / q.r - cg) / (1.0 + cg);
    const bool x = std::abs(q.xb_reflection) < kReflectionlessTolerance;
    const bool p = std::abs(q.pb_reflection) < kReflectionlessTolerance;
    q.reflectionless = x && p ? ReflectionBranch::Both : x ? ReflectionBranch::X : p ? ReflectionBranch::P : ReflectionBranch::None;
    return q;
}

RealMatrix QuarterTurnFrame::input_rotation() const {
    return two_mode(quarter_turns(turns[0]), quarter_turns(turns[1]));
}

RealMatrix QuarterTurnFrame::output_rotation() const {
    return two_mode(quarter_turns(turns[2]), quarter_turns(turns[3]));
}

RealMatrix QuarterTurnFrame::apply(const RealMatrix& s) const {
    return output_rotation() * s * input_rotation().transpose();
}

std::optional<HalfMatchedForm> detect_half_matched(const QuadratureMatrix& s, double tol) {
    if (s.rows() != 4 || s.cols() != 4) {
        throw DimensionError("detect_half_matched expects a 4x4 two-mode matrix");
    }
    if (!is_symplectic(s, tol)) {
        throw PreconditionError("detect_half_matched: matrix is not symplectic");
    }
    const double scale = std::max(1.0, s.values().cwiseAbs().maxCoeff());
    const double zero = tol * scale;

    for (int k = 0; k < 256; ++k) {
        QuarterTurnFrame frame{{k >> 6, (k >> 4) & 3, (k >> 2) & 3, k & 3}};
        const RealMatrix c = frame.apply(s.values());
        bool match = c(2, 0) > zero && c(0, 2) > zero;
        for (const Cell& z : kZeros) {
            match = match && std::abs(c(z.row, z.col)) <= zero;
        }
        if (!match) {
            continue;
        }
        HalfMatchedForm f;
        f.xi = c(2, 0);
        f.gamma = c(2, 2);
        f.mu = c(0, 2);
        f.gamma_a = c(1, 1);
        f.frame = frame;
        f.canonical = c;
        return f;
    }
    return std::nullopt;
}

QuadratureMatrix coupling_block(const QuadratureMatrix& s_x) {
    if (s_x.rows() != 8 || s_x.cols() != 8) {
        throw DimensionError("coupling_block expects the 8x8 quadrature scattering matrix");
    }
    constexpr int idx[4] = {0, 1, 4, 5};
    RealMatrix out(4, 4);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out(i, j) = s_x(idx[i], idx[j]);
        }
    }
    static const std::vector<std::string> ports{"a_c", "b_c"};
    return QuadratureMatrix(out, ports, ports);
}

RealMatrix SqueezerPlan::encoder() const { return two_mode(squeezer(input_a), squeezer(input_b)); }

RealMatrix SqueezerPlan::decoder() const { return two_mode(squeezer(output_a), squeezer(output_b)); }

SqueezerPlan perfect_transduction_plan(const HalfMatchedForm& f, double s) {
    if (!(s >= 1.0)) {
        throw PreconditionError("perfect_transduction_plan needs s >= 1");
    }
    SqueezerPlan plan;
    plan.input_a = s;
    plan.output_b = 1.0 / (f.xi * s);
    return plan;
}

SqueezerPlan two_way_plan(const HalfMatchedForm& f, double s, std::optional<double> u) {
    if (!(s >= 1.0)) {
        throw PreconditionError("two_way_plan needs s >= 1");
    }
    const double ub = u.value_or(1.0 / s);
    if (!(ub > 0.0)) {
        throw PreconditionError("two_way_plan needs a positive b-input scale");
    }
    SqueezerPlan plan;
    plan.input_a = s;
    plan.input_b = ub;
    plan.output_a = 1.0 / (f.mu * ub);
    plan.output_b = 1.0 / (f.xi * s);
    return plan;
}

ComposedChannels compose(const RealMatrix& s_canonical, const SqueezerPlan& plan) {
    if (s_canonical.rows() != 4 || s_canonical.cols() != 4) {
        throw DimensionError("compose expects a 4x4 two-mode matrix");
    }
    const RealMatrix total = plan.decoder() * s_canonical * plan.encoder();
    ComposedChannels out;
    out.a_to_b.T = total.block<2, 2>(2, 0);
    const Eigen::Matrix2d e_b = total.block<2, 2>(2, 2);
    out.a_to_b.N = e_b * e_b.transpose();
    out.b_to_a.T = total.block<2, 2>(0, 2);
    const Eigen::Matrix2d e_a = total.block<2, 2>(0, 0);
    out.b_to_a.N = e_a * e_a.transpose();
    return out;
}

}  // namespace transduction
