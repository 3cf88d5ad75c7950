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

#include "transduction/symplectic.hpp"

#include "transduction/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace transduction {

namespace {

std::vector<std::string> default_ports(Eigen::Index dimension) {
    std::vector<std::string> ports;
    for (Eigen::Index k = 0; k < dimension / 2; ++k) {
        ports.push_back("m" + std::to_string(k));
    }
    return ports;
}

void check_labels(Eigen::Index rows, Eigen::Index cols, const std::vector<std::string>& row_ports,
                  const std::vector<std::string>& col_ports) {
    if (rows % 2 != 0 || cols % 2 != 0) {
        throw DimensionError("quadrature/ladder matrices need even dimensions, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (static_cast<Eigen::Index>(row_ports.size()) * 2 != rows ||
        static_cast<Eigen::Index>(col_ports.size()) * 2 != cols) {
        throw DimensionError("port labels do not match matrix dimensions");
    }
}

double max_abs(const RealMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

const Eigen::Matrix2cd& quadrature_block() {
    static const Eigen::Matrix2cd q = [] {
        Eigen::Matrix2cd b;
        b << 1.0, 1.0, Complex(0.0, -1.0), Complex(0.0, 1.0);
        return b;
    }();
    return q;
}

const Eigen::Matrix2cd& quadrature_block_inverse() {
    static const Eigen::Matrix2cd q = [] {
        Eigen::Matrix2cd b;
        b << 0.5, Complex(0.0, 0.5), 0.5, Complex(0.0, -0.5);
        return b;
    }();
    return q;
}

ComplexMatrix kron_identity(const Eigen::Matrix2cd& block, Eigen::Index n_modes) {
    ComplexMatrix out = ComplexMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        out.block<2, 2>(2 * k, 2 * k) = block;
    }
    return out;
}

}  // namespace

SymplecticForm::SymplecticForm(int n_modes) : n_modes_(n_modes) {
    if (n_modes <= 0) {
        throw DimensionError("symplectic form needs at least one mode");
    }
    omega_ = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega_(2 * k, 2 * k + 1) = 1.0;
        omega_(2 * k + 1, 2 * k) = -1.0;
    }
}

QuadratureMatrix::QuadratureMatrix(RealMatrix values)
    : QuadratureMatrix(values, default_ports(values.rows()), default_ports(values.cols())) {}

QuadratureMatrix::QuadratureMatrix(RealMatrix values, std::vector<std::string> row_ports,
                                   std::vector<std::string> col_ports)
    : values_(std::move(values)), row_ports_(std::move(row_ports)), col_ports_(std::move(col_ports)) {
    check_labels(values_.rows(), values_.cols(), row_ports_, col_ports_);
}

std::string QuadratureMatrix::row_label(int index) const {
    return row_ports_.at(index / 2) + (index % 2 == 0 ? ".x" : ".p");
}

std::string QuadratureMatrix::col_label(int index) const {
    return col_ports_.at(index / 2) + (index % 2 == 0 ? ".x" : ".p");
}

LadderMatrix::LadderMatrix(ComplexMatrix values)
    : LadderMatrix(values, default_ports(values.rows()), default_ports(values.cols())) {}

LadderMatrix::LadderMatrix(ComplexMatrix values, std::vector<std::string> row_ports,
                           std::vector<std::string> col_ports)
    : values_(std::move(values)), row_ports_(std::move(row_ports)), col_ports_(std::move(col_ports)) {
    check_labels(values_.rows(), values_.cols(), row_ports_, col_ports_);
}

std::string LadderMatrix::row_label(int index) const {
    return row_ports_.at(index / 2) + (index % 2 == 0 ? "" : "^dagger");
}

std::string LadderMatrix::col_label(int index) const {
    return col_ports_.at(index / 2) + (index % 2 == 0 ? "" : "^dagger");
}

CovarianceMatrix::CovarianceMatrix(RealMatrix values) : values_(std::move(values)) {
    if (values_.rows() != values_.cols() || values_.rows() % 2 != 0 || values_.rows() == 0) {
        throw DimensionError("covariance matrix must be square with even, nonzero order");
    }
    const double scale = std::max(1.0, max_abs(values_));
    if ((values_ - values_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw PreconditionError("covariance matrix is not symmetric");
    }
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
    return CovarianceMatrix(RealMatrix::Identity(2 * n_modes, 2 * n_modes));
}

double CovarianceMatrix::uncertainty_margin() const {
    const SymplecticForm omega(n_modes());
    const ComplexMatrix h = values_.cast<Complex>() + Complex(0.0, 1.0) * omega.matrix().cast<Complex>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

std::vector<double> BlochMessiahFactors::squeezing() const {
    std::vector<double> d;
    for (int k = 0; k < diagonal.rows() / 2; ++k) {
        d.push_back(diagonal(2 * k, 2 * k));
    }
    return d;
}

RealMatrix BlochMessiahFactors::reconstruct() const {
    return left.values() * diagonal.values() * right.values();
}

double symplectic_residual(const RealMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
        throw DimensionError("symplectic test needs a square matrix of even order, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const SymplecticForm omega(static_cast<int>(m.rows() / 2));
    return (m * omega.matrix() * m.transpose() - omega.matrix()).cwiseAbs().maxCoeff();
}

bool is_symplectic(const RealMatrix& m, double tol) { return symplectic_residual(m) <= tol; }

bool is_symplectic(const QuadratureMatrix& m, double tol) { return is_symplectic(m.values(), tol); }

bool is_symplectic_orthogonal(const RealMatrix& m, double tol) {
    if (!is_symplectic(m, tol)) {
        return false;
    }
    const RealMatrix gram = m * m.transpose();
    return (gram - RealMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

bool has_doubled_structure(const LadderMatrix& m, double tol) {
    const ComplexMatrix& s = m.values();
    const double scale = std::max(1.0, s.size() == 0 ? 0.0 : s.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
        for (Eigen::Index j = 0; j < s.cols(); ++j) {
            // (i ^ 1) is the partner row/column of the same port.
            if (std::abs(s(i ^ 1, j ^ 1) - std::conj(s(i, j))) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

QuadratureMatrix ladder_to_quadrature(const LadderMatrix& s) {
    const ComplexMatrix q_left = kron_identity(quadrature_block(), s.rows() / 2);
    const ComplexMatrix q_right_inv = kron_identity(quadrature_block_inverse(), s.cols() / 2);
    const ComplexMatrix product = q_left * s.values() * q_right_inv;

    const RealMatrix real = product.real();
    const double residue = product.size() == 0 ? 0.0 : product.imag().cwiseAbs().maxCoeff();
    const double threshold = 1e-12 * std::max(1.0, max_abs(real));
    if (residue > threshold) {
        throw ConventionError("ladder matrix lacks the doubled structure: imaginary residue " +
                              std::to_string(residue) + " after the quadrature transform");
    }
    return QuadratureMatrix(real, s.row_ports(), s.col_ports());
}

LadderMatrix quadrature_to_ladder(const QuadratureMatrix& s) {
    const ComplexMatrix q_left_inv = kron_identity(quadrature_block_inverse(), s.rows() / 2);
    const ComplexMatrix q_right = kron_identity(quadrature_block(), s.cols() / 2);
    return LadderMatrix(q_left_inv * s.values().cast<Complex>() * q_right, s.row_ports(), s.col_ports());
}

bool cp_check(const RealMatrix& t, const RealMatrix& n, double tol) {
    if (n.rows() != n.cols() || n.rows() % 2 != 0 || t.rows() != n.rows() || t.cols() % 2 != 0) {
        throw DimensionError("cp_check needs T (2n x 2m) and N (2n x 2n)");
    }
    const double scale = std::max(1.0, max_abs(n));
    if ((n - n.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw PreconditionError("cp_check: noise matrix N is not symmetric");
    }
    const SymplecticForm omega_out(static_cast<int>(n.rows() / 2));
    const SymplecticForm omega_in(static_cast<int>(t.cols() / 2));
    const RealMatrix lifted = omega_out.matrix() - t * omega_in.matrix() * t.transpose();
    const ComplexMatrix h = n.cast<Complex>() + Complex(0.0, 1.0) * lifted.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

Eigen::Matrix2d rotation(double angle) {
    // Quarter turns are exact so that frame searches compare clean zeros.
    const double quarter = angle / (M_PI / 2.0);
    double c = std::cos(angle);
    double s = std::sin(angle);
    if (std::abs(quarter - std::round(quarter)) < 1e-15) {
        const long k = ((static_cast<long>(std::llround(quarter)) % 4) + 4) % 4;
        constexpr double cosines[4] = {1.0, 0.0, -1.0, 0.0};
        constexpr double sines[4] = {0.0, 1.0, 0.0, -1.0};
        c = cosines[k];
        s = sines[k];
    }
    Eigen::Matrix2d r;
    r << c, s, -s, c;
    return r;
}

Eigen::Matrix2d squeezer(double x_scale) {
    if (!(x_scale > 0.0)) {
        throw PreconditionError("squeezer scale must be positive");
    }
    Eigen::Matrix2d s = Eigen::Matrix2d::Zero();
    s(0, 0) = x_scale;
    s(1, 1) = 1.0 / x_scale;
    return s;
}

RealMatrix direct_sum(const std::vector<Eigen::Matrix2d>& blocks) {
    const auto n = static_cast<Eigen::Index>(blocks.size());
    RealMatrix out = RealMatrix::Zero(2 * n, 2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.block<2, 2>(2 * k, 2 * k) = blocks[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace transduction
