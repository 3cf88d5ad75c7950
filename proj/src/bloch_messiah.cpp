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

#include "transduction/errors.hpp"
#include "transduction/symplectic.hpp"

#include <algorithm>
#include <cmath>

namespace transduction {

namespace {

constexpr double kUnitLogTolerance = 1e-9;
constexpr double kClusterLogTolerance = 1e-9;
constexpr double kGaugeZero = 1e-12;

struct Frame {
    RealMatrix omega_t;
    std::vector<Eigen::VectorXd> chosen;

    Eigen::VectorXd orthogonalize(Eigen::VectorXd v) const {
        // Two passes keep the basis orthonormal to working precision.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : chosen) {
                v -= u.dot(v) * u;
            }
        }
        return v;
    }

    void add_mode(const Eigen::VectorXd& ex) {
        chosen.push_back(ex);
        chosen.push_back(omega_t * ex);
    }
};

// Picks `count` modes inside the column span of `basis`, preferring the
// standard basis vector with the largest remaining projection (lower index wins ties).
void span_modes(Frame& frame, const RealMatrix& basis, int count) {
    const Eigen::Index dim = basis.rows();
    const RealMatrix projector = basis * basis.transpose();
    for (int m = 0; m < count; ++m) {
        Eigen::VectorXd best;
        double best_norm = -1.0;
        for (Eigen::Index k = 0; k < dim; ++k) {
            Eigen::VectorXd candidate = frame.orthogonalize(projector.col(k));
            const double norm = candidate.norm();
            if (norm > best_norm * (1.0 + 1e-12)) {
                best_norm = norm;
                best = std::move(candidate);
            }
        }
        if (!(best_norm > 1e-8)) {
            throw PreconditionError("bloch_messiah: degenerate subspace could not be spanned");
        }
        best /= best_norm;
        frame.add_mode(frame.orthogonalize(best).normalized());
    }
}

}  // namespace

BlochMessiahFactors bloch_messiah(const QuadratureMatrix& s, double tol) {
    const RealMatrix& m = s.values();
    const double residual = symplectic_residual(m);
    if (residual > tol) {
        throw PreconditionError("bloch_messiah: matrix is not symplectic (residual " +
                                std::to_string(residual) + ")");
    }
    const Eigen::Index dim = m.rows();
    const int n = static_cast<int>(dim / 2);
    const SymplecticForm omega(n);

    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RealMatrix& u = svd.matrixU();
    const RealMatrix& v = svd.matrixV();
    const Eigen::VectorXd& sigma = svd.singularValues();
    const RealMatrix polar = u * v.transpose();
    RealMatrix p = v * sigma.asDiagonal() * v.transpose();
    p = 0.5 * (p + p.transpose());

    // Singular values come in reciprocal pairs (sigma_i, sigma_{2n-1-i}).
    int squeezed = 0;
    while (squeezed < n && std::log(sigma(squeezed)) > kUnitLogTolerance) {
        ++squeezed;
    }

    Frame frame{omega.matrix().transpose(), {}};
    int start = 0;
    while (start < squeezed) {
        int end = start + 1;
        const double head = std::log(sigma(start));
        while (end < squeezed && head - std::log(sigma(end)) <= kClusterLogTolerance * std::max(1.0, head)) {
            ++end;
        }
        span_modes(frame, v.middleCols(start, end - start), end - start);
        start = end;
    }
    if (squeezed < n) {
        span_modes(frame, v.middleCols(squeezed, dim - 2 * squeezed), n - squeezed);
    }

    RealMatrix w(dim, dim);
    std::vector<double> d(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Eigen::VectorXd ex = frame.chosen[static_cast<std::size_t>(2 * k)];
        Eigen::VectorXd ep = frame.chosen[static_cast<std::size_t>(2 * k + 1)];
        double dk = std::sqrt(ex.dot(p * ex) / ep.dot(p * ep));
        if (dk < 1.0) {
            // Quarter turn within the mode: (e_x, e_p) -> (e_p, -e_x).
            std::swap(ex, ep);
            ep = -ep;
            dk = 1.0 / dk;
        }
        w.col(2 * k) = ex;
        w.col(2 * k + 1) = ep;
        d[static_cast<std::size_t>(k)] = dk;
    }

    RealMatrix left = polar * w;
    RealMatrix right = w.transpose();
    for (int k = 0; k < n; ++k) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double entry = left(r, 2 * k);
            if (std::abs(entry) > kGaugeZero) {
                if (entry < 0.0) {
                    left.middleCols(2 * k, 2) *= -1.0;
                    right.middleRows(2 * k, 2) *= -1.0;
                }
                break;
            }
        }
    }

    RealMatrix diagonal = RealMatrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        diagonal(2 * k, 2 * k) = d[static_cast<std::size_t>(k)];
        diagonal(2 * k + 1, 2 * k + 1) = 1.0 / d[static_cast<std::size_t>(k)];
    }

    std::vector<std::string> modes;
    for (int k = 0; k < n; ++k) {
        modes.push_back("m" + std::to_string(k));
    }
    return BlochMessiahFactors{QuadratureMatrix(left, s.row_ports(), modes),
                               QuadratureMatrix(diagonal, modes, modes),
                               QuadratureMatrix(right, modes, s.col_ports())};
}

}  // namespace transduction
