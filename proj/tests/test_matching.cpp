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
#include "transduction/matching.hpp"
#include "transduction/metrics.hpp"
#include "transduction/model.hpp"

using namespace transduction;

namespace {

QuadratureMatrix matched_block(double cg, double cnu) {
    SystemParams p = SystemParams::from_cooperativities(cg, cnu);
    p.theta = kMatchingPumpPhase;
    return coupling_block(scattering_quadrature(p));
}

}  // namespace

TEST_CASE("quadrature relations agree with the Hamiltonian oracle") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        const double cg = 3.0 * u(rng);
        const double cnu = u(rng) * (1.0 + cg) * (1.0 + cg) / 4.0 * 0.95;
        const SystemParams p = SystemParams::from_cooperativities(cg, cnu);
        if (!spectrally_stable(p)) {
            continue;
        }
        const oracle::Mat s = oracle::quadrature_scattering({p.g, p.nu, -M_PI / 2.0, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0});
        const QuadratureRelations q = quadrature_relations(cg, cnu);
        const double scale = std::max(1.0, oracle::max_abs(s));
        CHECK(std::abs(q.xb_from_pa - s(4, 1)) < 1e-10 * scale);
        CHECK(std::abs(q.xb_reflection - s(4, 4)) < 1e-10 * scale);
        CHECK(std::abs(q.pb_from_xa - s(5, 0)) < 1e-10 * scale);
        CHECK(std::abs(q.pb_reflection - s(5, 5)) < 1e-10 * scale);
        CHECK(std::abs(s(4, 0)) < 1e-12 * scale);
        CHECK(std::abs(s(5, 1)) < 1e-12 * scale);
    }
}

TEST_CASE("quadrature relations at the reference point") {
    const QuadratureRelations q = quadrature_relations(0.25, 0.140625);
    CHECK(q.r == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(q.xb_from_pa == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(q.xb_reflection == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(q.pb_from_xa == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(std::abs(q.pb_reflection) < 1e-15);
    CHECK(q.reflectionless == ReflectionBranch::P);
    CHECK(quadrature_relations(1.0, 0.0).reflectionless == ReflectionBranch::Both);
    CHECK(quadrature_relations(0.5, 0.1).reflectionless == ReflectionBranch::None);
    CHECK(quadrature_relations(3.0, half_matching_cnu(3.0)).reflectionless == ReflectionBranch::X);
    CHECK(std::string(to_string(ReflectionBranch::P)) == "p");
    CHECK_THROWS_AS(quadrature_relations(0.5, 0.6), StabilityError);
}

TEST_CASE("quarter-turn frames") {
    QuarterTurnFrame id;
    const RealMatrix s = matched_block(0.3, 0.1).values();
    CHECK(id.apply(s) == s);
    QuarterTurnFrame f{{1, 2, 3, 0}};
    const RealMatrix t = f.apply(s);
    CHECK(symplectic_residual(t) < 1e-12);
    CHECK(f.input_rotation()(0, 1) == 1.0);
    CHECK(f.input_rotation()(2, 2) == -1.0);
}

TEST_CASE("half-matched form is detected on the matching curve") {
    for (double cg : {0.1, 0.25, 0.5, 2.0, 4.0}) {
        CAPTURE(cg);
        const QuadratureMatrix s = matched_block(cg, half_matching_cnu(cg));
        const auto form = detect_half_matched(s);
        REQUIRE(form.has_value());
        const RealMatrix& c = form->canonical;
        const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
        CHECK(c(2, 0) == doctest::Approx(form->xi));
        CHECK(c(3, 1) == doctest::Approx(1.0 / form->xi).epsilon(1e-10));
        CHECK(std::abs(c(3, 3)) < 1e-12 * scale);
        CHECK(c(1, 3) == doctest::Approx(1.0 / form->mu).epsilon(1e-10));
        CHECK(form->gamma_a == doctest::Approx(-form->gamma / (form->xi * form->mu)).epsilon(1e-10));
        CHECK((form->frame.apply(s.values()) - c).cwiseAbs().maxCoeff() == 0.0);
        CHECK(extract_channel(scattering_quadrature([&] {
                                  SystemParams p = SystemParams::from_cooperativities(cg, half_matching_cnu(cg));
                                  p.theta = kMatchingPumpPhase;
                                  return p;
                              }()),
                              Direction::OpticalToMicrowave, BathSpec::vacuum())
                  .T.determinant() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("half-matched form is not detected off the curve") {
    CHECK_FALSE(detect_half_matched(matched_block(0.25, 0.1)).has_value());
    CHECK_FALSE(detect_half_matched(matched_block(0.5, half_matching_cnu(0.5) * (1.0 + 1e-6))).has_value());
    std::mt19937_64 rng(2);
    CHECK_FALSE(detect_half_matched(QuadratureMatrix(oracle::random_symplectic(2, rng))).has_value());
    CHECK_THROWS_AS(detect_half_matched(QuadratureMatrix(RealMatrix::Identity(4, 4) * 2.0)), PreconditionError);
    CHECK_THROWS_AS(detect_half_matched(QuadratureMatrix(RealMatrix::Identity(2, 2))), DimensionError);
}

TEST_CASE("reference point in canonical form") {
    const auto form = detect_half_matched(matched_block(0.25, 0.140625));
    REQUIRE(form.has_value());
    CHECK(form->xi == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(form->gamma == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(form->mu == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("one-way squeezer plan gives a perfect channel") {
    for (double cg : {0.1, 0.25, 0.5, 2.0, 4.0}) {
        CAPTURE(cg);
        const auto form = detect_half_matched(matched_block(cg, half_matching_cnu(cg)));
        REQUIRE(form.has_value());
        for (double s : {1.0, 3.0, 10.0}) {
            const SqueezerPlan plan = perfect_transduction_plan(*form, s);
            CHECK(plan.input_a == s);
            CHECK(plan.output_b == doctest::Approx(1.0 / (form->xi * s)));
            const ComposedChannels ch = compose(form->canonical, plan);
            CHECK(std::abs(ch.a_to_b.T.determinant() - 1.0) < 1e-12);
            CHECK(std::abs(ch.a_to_b.N.determinant()) < 1e-12);
            CHECK((ch.a_to_b.T - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
            const double resid = form->gamma / (form->xi * s);
            CHECK(ch.a_to_b.N(0, 0) == doctest::Approx(resid * resid).epsilon(1e-10));
        }
        CHECK_THROWS_AS(perfect_transduction_plan(*form, 0.5), PreconditionError);
    }
}

TEST_CASE("two-way plan makes both directions perfect") {
    for (double cg : {0.1, 0.25, 0.5, 2.0, 4.0}) {
        CAPTURE(cg);
        const auto form = detect_half_matched(matched_block(cg, half_matching_cnu(cg)));
        REQUIRE(form.has_value());
        for (double s : {1.0, 4.0}) {
            const SqueezerPlan plan = two_way_plan(*form, s);
            const RealMatrix total = plan.decoder() * form->canonical * plan.encoder();
            CHECK(symplectic_residual(total) < 1e-10);
            const ComposedChannels ch = compose(form->canonical, plan);
            CHECK(std::abs(ch.a_to_b.T.determinant() - 1.0) < 1e-12);
            CHECK(std::abs(ch.a_to_b.N.determinant()) < 1e-12);
            CHECK(std::abs(ch.b_to_a.T.determinant() - 1.0) < 1e-12);
            CHECK(std::abs(ch.b_to_a.N.determinant()) < 1e-12);
        }
        const SqueezerPlan custom = two_way_plan(*form, 2.0, 0.25);
        CHECK(custom.input_b == 0.25);
        CHECK(custom.output_a == doctest::Approx(1.0 / (form->mu * 0.25)));
    }
}
