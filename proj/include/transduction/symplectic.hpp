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

// Real and complex dense matrices with symplectic structure.
//
// Conventions used throughout the library:
//   * quadratures are ordered (x, p) per port, ports in the order the caller
//     supplies them;
//   * x = a + a^dagger, p = -i a + i a^dagger, so [x, p] = 2i and the vacuum
//     covariance matrix is the identity;
//   * the symplectic form is block diagonal with [[0, 1], [-1, 0]] per mode.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

namespace transduction {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-10;

/// Block-diagonal symplectic form for `n_modes` modes.
class SymplecticForm {
public:
    explicit SymplecticForm(int n_modes);

    int n_modes() const noexcept { return n_modes_; }
    int dimension() const noexcept { return 2 * n_modes_; }
    const RealMatrix& matrix() const noexcept { return omega_; }

private:
    int n_modes_;
    RealMatrix omega_;
};

/// Real matrix acting on quadrature vectors. Rows and columns are labelled by
/// port; each port contributes an (x, p) pair in that order.
class QuadratureMatrix {
public:
    QuadratureMatrix() = default;
    explicit QuadratureMatrix(RealMatrix values);
    QuadratureMatrix(RealMatrix values, std::vector<std::string> row_ports,
                     std::vector<std::string> col_ports);

    const RealMatrix& values() const noexcept { return values_; }
    double operator()(int row, int col) const { return values_(row, col); }
    int rows() const noexcept { return static_cast<int>(values_.rows()); }
    int cols() const noexcept { return static_cast<int>(values_.cols()); }

    const std::vector<std::string>& row_ports() const noexcept { return row_ports_; }
    const std::vector<std::string>& col_ports() const noexcept { return col_ports_; }
    std::string row_label(int index) const;
    std::string col_label(int index) const;

private:
    RealMatrix values_;
    std::vector<std::string> row_ports_;
    std::vector<std::string> col_ports_;
};

/// Complex matrix acting on the doubled ladder vector (a_1, a_1^dagger, a_2, ...).
class LadderMatrix {
public:
    LadderMatrix() = default;
    explicit LadderMatrix(ComplexMatrix values);
    LadderMatrix(ComplexMatrix values, std::vector<std::string> row_ports,
                 std::vector<std::string> col_ports);

    const ComplexMatrix& values() const noexcept { return values_; }
    Complex operator()(int row, int col) const { return values_(row, col); }
    int rows() const noexcept { return static_cast<int>(values_.rows()); }
    int cols() const noexcept { return static_cast<int>(values_.cols()); }

    const std::vector<std::string>& row_ports() const noexcept { return row_ports_; }
    const std::vector<std::string>& col_ports() const noexcept { return col_ports_; }
    std::string row_label(int index) const;
    std::string col_label(int index) const;

private:
    ComplexMatrix values_;
    std::vector<std::string> row_ports_;
    std::vector<std::string> col_ports_;
};

/// Symmetric covariance matrix, vacuum = identity.
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(RealMatrix values);

    static CovarianceMatrix vacuum(int n_modes);

    const RealMatrix& values() const noexcept { return values_; }
    int n_modes() const noexcept { return static_cast<int>(values_.rows() / 2); }

    /// Smallest eigenvalue of the Hermitian matrix V + i*Omega.
    double uncertainty_margin() const;
    bool is_physical(double tol = kDefaultTolerance) const { return uncertainty_margin() >= -tol; }

private:
    RealMatrix values_;
};

/// S = left * diagonal * right, with left/right symplectic orthogonal and
/// diagonal = diag(d_1, 1/d_1, d_2, 1/d_2, ...), d_k >= 1, sorted descending.
struct BlochMessiahFactors {
    QuadratureMatrix left;
    QuadratureMatrix diagonal;
    QuadratureMatrix right;

    /// The per-mode squeezing factors d_k.
    std::vector<double> squeezing() const;
    RealMatrix reconstruct() const;
};

/// max_ij |M Omega M^T - Omega|_ij. Throws DimensionError for non-square or odd matrices.
double symplectic_residual(const RealMatrix& m);

bool is_symplectic(const RealMatrix& m, double tol = kDefaultTolerance);
bool is_symplectic(const QuadratureMatrix& m, double tol = kDefaultTolerance);

/// True when M is both orthogonal and symplectic within `tol`.
bool is_symplectic_orthogonal(const RealMatrix& m, double tol = kDefaultTolerance);

/// True when conjugating M under the per-mode (a <-> a^dagger) swap leaves it unchanged.
bool has_doubled_structure(const LadderMatrix& m, double tol = 1e-12);

/// S_x = Q S_a Q^-1 with Q = I (x) [[1, 1], [-i, i]].
///
/// The imaginary residue of the product must stay below 1e-12 relative to the
/// largest entry (absolute below unit scale); otherwise ConventionError.
QuadratureMatrix ladder_to_quadrature(const LadderMatrix& s);

/// Inverse of ladder_to_quadrature.
LadderMatrix quadrature_to_ladder(const QuadratureMatrix& s);

/// Bloch-Messiah (Euler) factorization of a symplectic matrix.
///
/// Computed from the polar decomposition S = O P, followed by a symplectic
/// orthogonal congruence that diagonalizes P. Modes are ordered by decreasing
/// squeezing; degenerate subspaces are spanned by projecting the standard basis
/// in port order. Gauge: each mode pair of `left` is rotated by pi if needed so
/// that the first nonzero entry of its x column is positive.
///
/// Throws PreconditionError when `s` is not symplectic within `tol`.
BlochMessiahFactors bloch_messiah(const QuadratureMatrix& s, double tol = kDefaultTolerance);

/// Complete-positivity test for a Gaussian channel (T, N):
/// all eigenvalues of N + i*Omega - i*T*Omega*T^T must be >= -tol.
/// Throws PreconditionError if N is not symmetric.
bool cp_check(const RealMatrix& t, const RealMatrix& n, double tol = kDefaultTolerance);

// Elementary single-mode symplectic blocks.
Eigen::Matrix2d rotation(double angle);
Eigen::Matrix2d squeezer(double x_scale);

/// Embeds 2x2 per-mode blocks on the diagonal of a 2n x 2n matrix.
RealMatrix direct_sum(const std::vector<Eigen::Matrix2d>& blocks);

}  // namespace transduction
