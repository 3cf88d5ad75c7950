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

#include "transduction/model.hpp"

#include "transduction/errors.hpp"

#include <cmath>
#include <limits>

namespace transduction {

namespace {

using Matrix4cd = Eigen::Matrix4cd;

constexpr Complex kI{0.0, 1.0};

bool finite(double v) { return std::isfinite(v); }

Eigen::Matrix<double, 4, 8> input_coupling(const SystemParams& p) {
    const double koc = std::sqrt(p.zeta_o * p.kappa_o);
    const double koi = std::sqrt((1.0 - p.zeta_o) * p.kappa_o);
    const double kec = std::sqrt(p.zeta_e * p.kappa_e);
    const double kei = std::sqrt((1.0 - p.zeta_e) * p.kappa_e);
    Eigen::Matrix<double, 4, 8> b = Eigen::Matrix<double, 4, 8>::Zero();
    b(0, 0) = b(1, 1) = koc;
    b(0, 2) = b(1, 3) = koi;
    b(2, 4) = b(3, 5) = kec;
    b(2, 6) = b(3, 7) = kei;
    return b;
}

Matrix4cd drift(const SystemParams& p) {
    Matrix4cd a = Matrix4cd::Zero();
    a(0, 0) = kI * p.delta_o - p.kappa_o / 2.0;
    a(1, 1) = -kI * p.delta_o - p.kappa_o / 2.0;
    a(2, 2) = -kI * p.delta_e - p.kappa_e / 2.0;
    a(3, 3) = kI * p.delta_e - p.kappa_e / 2.0;
    a(0, 2) = -kI * p.g;
    a(1, 3) = kI * p.g;
    a(2, 0) = -kI * p.g;
    a(3, 1) = kI * p.g;
    a(2, 3) = -2.0 * kI * p.nu * std::exp(-kI * p.theta);
    a(3, 2) = 2.0 * kI * p.nu * std::exp(kI * p.theta);
    return a;
}

}  // namespace

SystemParams SystemParams::from_cooperativities(double cg, double cnu, double kappa_o, double kappa_e) {
    if (cg < 0.0 || cnu < 0.0) {
        throw PreconditionError("cooperativities must be nonnegative");
    }
    SystemParams p;
    p.kappa_o = kappa_o;
    p.kappa_e = kappa_e;
    p.g = std::sqrt(cg * kappa_o * kappa_e) / 2.0;
    p.nu = std::sqrt(cnu) * kappa_e / 2.0;
    return p;
}

void SystemParams::validate() const {
    for (double v : {g, nu, theta, kappa_o, kappa_e, zeta_o, zeta_e, delta_o, delta_e, n_th}) {
        if (!finite(v)) {
            throw PreconditionError("system parameters must be finite");
        }
    }
    if (kappa_o <= 0.0 || kappa_e <= 0.0) {
        throw PreconditionError("dissipation rates kappa_o, kappa_e must be positive");
    }
    if (zeta_o < 0.0 || zeta_o > 1.0 || zeta_e < 0.0 || zeta_e > 1.0) {
        throw PreconditionError("extraction ratios must lie in [0, 1]");
    }
    if (nu < 0.0) {
        throw PreconditionError("pump strength nu must be nonnegative");
    }
    if (n_th < 0.0) {
        throw PreconditionError("bath occupancy n_th must be nonnegative");
    }
}

const char* to_string(Direction d) noexcept {
    return d == Direction::OpticalToMicrowave ? "o2m" : "m2o";
}

Direction parse_direction(const std::string& text) {
    if (text == "o2m" || text == "optical-to-microwave") {
        return Direction::OpticalToMicrowave;
    }
    if (text == "m2o" || text == "microwave-to-optical") {
        return Direction::MicrowaveToOptical;
    }
    throw ConfigError("unknown direction '" + text + "' (expected o2m or m2o)");
}

Eigen::Matrix2d Bath::covariance() const {
    Eigen::Matrix2d v;
    switch (kind) {
        case Kind::Vacuum:
            v.setIdentity();
            break;
        case Kind::Thermal:
            v = (2.0 * n + 1.0) * Eigen::Matrix2d::Identity();
            break;
        case Kind::Squeezed: {
            const double c = std::cosh(2.0 * lambda);
            const double s = std::sinh(2.0 * lambda);
            v << c + s * std::cos(phi), -s * std::sin(phi), -s * std::sin(phi), c - s * std::cos(phi);
            v *= 2.0 * n + 1.0;
            break;
        }
    }
    if (!v.allFinite() || !CovarianceMatrix(v).is_physical()) {
        throw PhysicalityError("bath covariance violates the uncertainty relation (n = " +
                               std::to_string(n) + ")");
    }
    return v;
}

BathSpec BathSpec::microwave_thermal(double n) {
    BathSpec spec;
    spec[Port::MicrowaveCoupling] = Bath::thermal(n);
    spec[Port::MicrowaveIntrinsic] = Bath::thermal(n);
    return spec;
}

BathSpec BathSpec::microwave_squeezed(double lambda, double phi, double n, bool coupling_only) {
    BathSpec spec;
    spec[Port::MicrowaveCoupling] = Bath::squeezed(lambda, phi, n);
    spec[Port::MicrowaveIntrinsic] = coupling_only ? Bath::thermal(n) : Bath::squeezed(lambda, phi, n);
    return spec;
}

std::array<int, 3> environment_ports(Direction d) noexcept {
    if (d == Direction::OpticalToMicrowave) {
        return {1, 2, 3};
    }
    return {0, 1, 3};
}

int signal_input_port(Direction d) noexcept { return d == Direction::OpticalToMicrowave ? 0 : 2; }

int signal_output_port(Direction d) noexcept { return d == Direction::OpticalToMicrowave ? 2 : 0; }

const std::vector<std::string>& port_names() {
    static const std::vector<std::string> names{"a_c", "a_i", "b_c", "b_i"};
    return names;
}

LadderMatrix build_dynamical_matrix(const SystemParams& p) {
    p.validate();
    static const std::vector<std::string> modes{"a", "b"};
    return LadderMatrix(drift(p), modes, modes);
}

double max_growth_rate(const SystemParams& p) {
    p.validate();
    Eigen::ComplexEigenSolver<Matrix4cd> solver(drift(p), false);
    return solver.eigenvalues().real().maxCoeff();
}

bool spectrally_stable(const SystemParams& p) { return max_growth_rate(p) < 0.0; }

ScatteringMatrix scattering(const SystemParams& p, double omega) {
    p.validate();
    if (!finite(omega)) {
        throw PreconditionError("frequency must be finite");
    }
    const Eigen::Vector4d d4(1.0, -1.0, 1.0, -1.0);
    const Matrix4cd resolvent_inv = -kI * omega * d4.cast<Complex>().asDiagonal().toDenseMatrix() - drift(p);

    Eigen::JacobiSVD<Matrix4cd> svd(resolvent_inv);
    const auto& sv = svd.singularValues();
    const double cond = sv(3) > 0.0 ? sv(0) / sv(3) : std::numeric_limits<double>::infinity();
    if (!(cond <= kSingularityCutoff)) {
        throw SingularityError("scattering resolvent is numerically singular (condition number " +
                                   std::to_string(cond) + ")",
                               cond);
    }

    const Eigen::Matrix<double, 4, 8> b = input_coupling(p);
    const Eigen::Matrix<Complex, 4, 8> bc = b.cast<Complex>();
    const ComplexMatrix s = bc.transpose() * resolvent_inv.partialPivLu().solve(bc) -
                            ComplexMatrix::Identity(8, 8);

    ScatteringMatrix out{LadderMatrix(s, port_names(), port_names()), cond, cond > kSingularityCutoff / 10.0};
    return out;
}

LadderMatrix scattering_ladder(const SystemParams& p, double omega) { return scattering(p, omega).ladder; }

QuadratureMatrix scattering_quadrature(const SystemParams& p, double omega) {
    return scattering(p, omega).quadrature();
}

CovarianceMatrix assemble_environment_covariance(const BathSpec& baths, Direction d) {
    RealMatrix v = RealMatrix::Zero(6, 6);
    const auto env = environment_ports(d);
    for (int k = 0; k < 3; ++k) {
        v.block<2, 2>(2 * k, 2 * k) = baths.ports[static_cast<std::size_t>(env[static_cast<std::size_t>(k)])].covariance();
    }
    return CovarianceMatrix(v);
}

GaussianChannel extract_channel(const QuadratureMatrix& s_x, Direction d, const BathSpec& baths) {
    if (s_x.rows() != 8 || s_x.cols() != 8) {
        throw DimensionError("extract_channel expects the 8x8 quadrature scattering matrix");
    }
    const RealMatrix& s = s_x.values();
    const int out = 2 * signal_output_port(d);
    const int in = 2 * signal_input_port(d);
    const auto env = environment_ports(d);

    Eigen::Matrix<double, 2, 6> e;
    for (int k = 0; k < 3; ++k) {
        e.middleCols<2>(2 * k) = s.block<2, 2>(out, 2 * env[static_cast<std::size_t>(k)]);
    }
    const RealMatrix v_env = assemble_environment_covariance(baths, d).values();

    GaussianChannel ch;
    ch.T = s.block<2, 2>(out, in);
    ch.N = e * v_env * e.transpose();
    ch.N = 0.5 * (ch.N + ch.N.transpose()).eval();
    return ch;
}

GaussianChannel extract_channel(const SystemParams& p, double omega, Direction d, const BathSpec& baths) {
    return extract_channel(scattering_quadrature(p, omega), d, baths);
}

}  // namespace transduction
