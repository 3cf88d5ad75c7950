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

// Heisenberg-Langevin model of the driven electro-optic transducer.
//
// Port order of the 8x8 scattering matrices: optical coupling (a_c), optical
// intrinsic (a_i), microwave coupling (b_c), microwave intrinsic (b_i). Each
// port is an (a, a^dagger) pair in the ladder basis and (x, p) in quadratures.

#include "transduction/symplectic.hpp"

#include <array>
#include <string>

namespace transduction {

struct SystemParams {
    double g = 0.0;      // optical-microwave coupling rate
    double nu = 0.0;     // parametric pump strength
    double theta = 0.0;  // pump phase (rad)
    double kappa_o = 1.0;
    double kappa_e = 1.0;
    double zeta_o = 1.0;  // extraction ratios
    double zeta_e = 1.0;
    double delta_o = 0.0;  // effective detunings
    double delta_e = 0.0;
    double n_th = 0.0;  // microwave bath occupancy

    /// Parameters from cooperativities: g = sqrt(Cg ko ke)/2, nu = sqrt(Cnu) ke/2.
    static SystemParams from_cooperativities(double cg, double cnu, double kappa_o = 1.0,
                                             double kappa_e = 1.0);

    double cg() const noexcept { return 4.0 * g * g / (kappa_o * kappa_e); }
    double cnu() const noexcept { return 4.0 * nu * nu / (kappa_e * kappa_e); }
    double chi_o() const noexcept { return delta_o / kappa_o; }
    double chi_e() const noexcept { return delta_e / kappa_e; }

    /// Throws PreconditionError on kappa <= 0, zeta outside [0, 1], nu < 0 or
    /// non-finite entries.
    void validate() const;
};

enum class Direction { OpticalToMicrowave, MicrowaveToOptical };

const char* to_string(Direction d) noexcept;
/// Accepts "o2m"/"optical-to-microwave" and "m2o"/"microwave-to-optical".
Direction parse_direction(const std::string& text);

/// Input state of one environment port.
struct Bath {
    enum class Kind { Vacuum, Thermal, Squeezed };

    Kind kind = Kind::Vacuum;
    double n = 0.0;
    double lambda = 0.0;
    double phi = 0.0;

    static Bath vacuum() { return {}; }
    static Bath thermal(double n) { return {Kind::Thermal, n, 0.0, 0.0}; }
    static Bath squeezed(double lambda, double phi, double n = 0.0) { return {Kind::Squeezed, n, lambda, phi}; }

    /// 2x2 covariance of the port. Throws PhysicalityError if V + i*Omega is not PSD.
    Eigen::Matrix2d covariance() const;
};

enum class Port { OpticalCoupling = 0, OpticalIntrinsic = 1, MicrowaveCoupling = 2, MicrowaveIntrinsic = 3 };

/// Bath for every port. The signal input port's entry is ignored when a
/// channel is extracted.
struct BathSpec {
    std::array<Bath, 4> ports{};

    Bath& operator[](Port p) { return ports[static_cast<std::size_t>(p)]; }
    const Bath& operator[](Port p) const { return ports[static_cast<std::size_t>(p)]; }

    static BathSpec vacuum() { return {}; }
    /// Thermal occupancy n on both microwave ports.
    static BathSpec microwave_thermal(double n);
    /// Squeezed thermal state on the microwave coupling port, and on the
    /// intrinsic port too unless `coupling_only`.
    static BathSpec microwave_squeezed(double lambda, double phi, double n, bool coupling_only = false);
};

/// Environment port indices of a direction, in scattering order.
std::array<int, 3> environment_ports(Direction d) noexcept;
int signal_input_port(Direction d) noexcept;
int signal_output_port(Direction d) noexcept;

struct GaussianChannel {
    Eigen::Matrix2d T;
    Eigen::Matrix2d N;
};

struct ScatteringMatrix {
    LadderMatrix ladder;
    double condition_number = 1.0;
    /// Condition number within a factor 10 of the singularity cutoff.
    bool near_singular = false;

    QuadratureMatrix quadrature() const { return ladder_to_quadrature(ladder); }
};

inline constexpr double kSingularityCutoff = 1e12;

const std::vector<std::string>& port_names();

/// 4x4 drift matrix on (a, a^dagger, b, b^dagger).
LadderMatrix build_dynamical_matrix(const SystemParams& p);

/// Largest real part of the eigenvalues of the drift matrix.
double max_growth_rate(const SystemParams& p);
bool spectrally_stable(const SystemParams& p);

/// S_a[w] = B^T (-i w D4 - A)^-1 B - I with D4 = diag(1, -1, 1, -1).
/// Throws SingularityError when the resolvent condition number exceeds 1e12.
ScatteringMatrix scattering(const SystemParams& p, double omega = 0.0);
LadderMatrix scattering_ladder(const SystemParams& p, double omega = 0.0);
QuadratureMatrix scattering_quadrature(const SystemParams& p, double omega = 0.0);

/// Block-diagonal 6x6 covariance of the environment ports of `d`.
CovarianceMatrix assemble_environment_covariance(const BathSpec& baths, Direction d);

/// T = signal block of S_x, N = E V_env E^T with E the environment block.
GaussianChannel extract_channel(const QuadratureMatrix& s_x, Direction d, const BathSpec& baths);
GaussianChannel extract_channel(const SystemParams& p, double omega, Direction d, const BathSpec& baths);

}  // namespace transduction
