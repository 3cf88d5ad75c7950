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
#include "transduction/symplectic.hpp"

using namespace transduction;

namespace {

ComplexMatrix random_doubled(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> d(0.0, 1.0);
    ComplexMatrix m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex al(d(rng), d(rng));
            const Complex be(d(rng), d(rng));
            m(2 * i, 2 * j) = al;
            m(2 * i, 2 * j + 1) = be;
            m(2 * i + 1, 2 * j) = std::conj(be);
            m(2 * i + 1, 2 * j + 1) = std::conj(al);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("symplectic form is block diagonal") {
    SymplecticForm w(3);
    CHECK(w.dimension() == 6);
    CHECK((w.matrix() - oracle::omega(3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("residual of random symplectic matrices is at rounding level") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k < 20; ++k) {
            const RealMatrix s = oracle::random_symplectic(n, rng);
            CHECK(symplectic_residual(s) < 1e-12);
            CHECK(is_symplectic(s));
        }
    }
    RealMatrix bad = RealMatrix::Identity(4, 4);
    bad(0, 0) = 2.0;
    CHECK_FALSE(is_symplectic(bad));
    CHECK_THROWS_AS(symplectic_residual(RealMatrix::Identity(3, 3)), DimensionError);
    CHECK_THROWS_AS(symplectic_residual(RealMatrix::Identity(4, 2)), DimensionError);
}

TEST_CASE("elementary blocks") {
    CHECK(rotation(M_PI / 2)(0, 1) == 1.0);
    CHECK(rotation(M_PI / 2)(0, 0) == 0.0);
    CHECK(rotation(M_PI)(0, 0) == -1.0);
    CHECK(is_symplectic_orthogonal(rotation(0.3)));
    const Eigen::Matrix2d z = squeezer(3.0);
    CHECK(z(0, 0) == 3.0);
    CHECK(z(1, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_FALSE(is_symplectic_orthogonal(z));
    const RealMatrix d = direct_sum({rotation(0.1), squeezer(2.0)});
    CHECK(d.rows() == 4);
    CHECK(d(2, 2) == 2.0);
    CHECK(d(0, 2) == 0.0);
}

TEST_CASE("ladder to quadrature agrees with the per-block oracle") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; ++n) {
        const ComplexMatrix m = random_doubled(n, rng);
        const QuadratureMatrix q = ladder_to_quadrature(LadderMatrix(m));
        CHECK((q.values() - oracle::ladder_to_quadrature(m)).cwiseAbs().maxCoeff() < 1e-13);
        const LadderMatrix back = quadrature_to_ladder(q);
        CHECK((back.values() - m).cwiseAbs().maxCoeff() < 1e-13);
        CHECK(has_doubled_structure(back));
    }
}

TEST_CASE("ladder matrix without doubled structure is rejected") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(1, 0) = Complex(0.0, 0.5);
    CHECK_FALSE(has_doubled_structure(LadderMatrix(m)));
    CHECK_THROWS_AS(ladder_to_quadrature(LadderMatrix(m)), ConventionError);
}

TEST_CASE("port labels") {
    QuadratureMatrix q(RealMatrix::Identity(4, 4), {"in", "aux"}, {"u", "v"});
    CHECK(q.row_label(0) == "in.x");
    CHECK(q.row_label(3) == "aux.p");
    CHECK(q.col_label(1) == "u.p");
    QuadratureMatrix d(RealMatrix::Identity(2, 2));
    CHECK(d.row_label(0) == "m0.x");
}

TEST_CASE("covariance matrices") {
    CHECK(CovarianceMatrix::vacuum(2).uncertainty_margin() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(CovarianceMatrix::vacuum(2).is_physical());
    RealMatrix v = RealMatrix::Identity(2, 2) * 0.5;
    CHECK_FALSE(CovarianceMatrix(v).is_physical());
    RealMatrix thermal = RealMatrix::Identity(2, 2) * 3.0;
    CHECK(CovarianceMatrix(thermal).uncertainty_margin() == doctest::Approx(2.0));
    RealMatrix asym = RealMatrix::Identity(2, 2);
    asym(0, 1) = 0.3;
    CHECK_THROWS_AS(CovarianceMatrix{asym}, PreconditionError);
}

TEST_CASE("Bloch-Messiah factorization of random symplectic matrices") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k < 25; ++k) {
            const RealMatrix s = oracle::random_symplectic(n, rng);
            const BlochMessiahFactors f = bloch_messiah(QuadratureMatrix(s));
            CHECK((f.reconstruct() - s).cwiseAbs().maxCoeff() < 1e-9);
            CHECK(is_symplectic_orthogonal(f.left.values(), 1e-9));
            CHECK(is_symplectic_orthogonal(f.right.values(), 1e-9));
            const auto d = f.squeezing();
            for (std::size_t i = 0; i < d.size(); ++i) {
                CHECK(d[i] >= 1.0);
                if (i > 0) {
                    CHECK(d[i] <= d[i - 1] * (1.0 + 1e-12));
                }
                CHECK(f.diagonal(2 * i, 2 * i) * f.diagonal(2 * i + 1, 2 * i + 1) ==
                      doctest::Approx(1.0).epsilon(1e-12));
            }
            // Singular values of S are d_k and 1/d_k.
            Eigen::JacobiSVD<RealMatrix> svd(s);
            CHECK(svd.singularValues()(0) == doctest::Approx(d[0]).epsilon(1e-10));
        }
    }
}

TEST_CASE("Bloch-Messiah of degenerate and trivial inputs") {
    const RealMatrix id = RealMatrix::Identity(4, 4);
    const BlochMessiahFactors f = bloch_messiah(QuadratureMatrix(id));
    CHECK((f.reconstruct() - id).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(f.squeezing()[0] == doctest::Approx(1.0));

    // Equal squeezing on both modes followed by a beam splitter.
    RealMatrix s = direct_sum({squeezer(2.0), squeezer(2.0)});
    const RealMatrix rot = direct_sum({rotation(0.4), rotation(-1.1)});
    s = rot * s;
    const BlochMessiahFactors g = bloch_messiah(QuadratureMatrix(s));
    CHECK((g.reconstruct() - s).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(g.squeezing()[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(g.squeezing()[1] == doctest::Approx(2.0).epsilon(1e-12));

    // Gauge: first nonzero entry of each x column of the left factor is positive.
    for (int k = 0; k < 2; ++k) {
        const auto col = g.left.values().col(2 * k);
        for (int i = 0; i < col.size(); ++i) {
            if (std::abs(col(i)) > 1e-12) {
                CHECK(col(i) > 0.0);
                break;
            }
        }
    }

    RealMatrix bad = RealMatrix::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(bloch_messiah(QuadratureMatrix(bad)), PreconditionError);
}

TEST_CASE("Bloch-Messiah is deterministic") {
    std::mt19937_64 rng(3);
    const RealMatrix s = oracle::random_symplectic(3, rng);
    const BlochMessiahFactors a = bloch_messiah(QuadratureMatrix(s));
    const BlochMessiahFactors b = bloch_messiah(QuadratureMatrix(s));
    CHECK(a.left.values() == b.left.values());
    CHECK(a.right.values() == b.right.values());
}

TEST_CASE("complete positivity test") {
    const Eigen::Matrix2d t = Eigen::Matrix2d::Identity() * std::sqrt(0.6);
    CHECK(cp_check(t, Eigen::Matrix2d::Identity() * 0.4));
    CHECK_FALSE(cp_check(t, Eigen::Matrix2d::Identity() * 0.3));
    // Amplifier with gain G needs N >= (G - 1).
    const Eigen::Matrix2d amp = Eigen::Matrix2d::Identity() * std::sqrt(2.0);
    CHECK(cp_check(amp, Eigen::Matrix2d::Identity()));
    CHECK_FALSE(cp_check(amp, Eigen::Matrix2d::Identity() * 0.9));
    // Phase conjugation T = diag(1, -1) scaled needs N >= eta + 1.
    Eigen::Matrix2d conj_t;
    conj_t << 1.0, 0.0, 0.0, -1.0;
    CHECK(cp_check(conj_t, Eigen::Matrix2d::Identity() * 2.0));
    CHECK_FALSE(cp_check(conj_t, Eigen::Matrix2d::Identity() * 1.9));
    Eigen::Matrix2d asym = Eigen::Matrix2d::Identity();
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(cp_check(t, asym), PreconditionError);
}
