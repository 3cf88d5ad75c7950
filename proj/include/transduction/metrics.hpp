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

// Channel figures of merit and closed-form transmissivities.

#include "transduction/model.hpp"

namespace transduction {

struct NoiseFigures {
    double n_e = 0.0;     // added thermal photons (eta != 1 branch)
    double sigma2 = 0.0;  // sqrt(det N)
    bool unit_branch = false;  // |eta - 1| <= 1e-9
};

struct CapacityBound {
    double bits = 0.0;
    bool infinite = false;

    double value() const noexcept;
};

struct ChannelMetrics {
    double eta = 0.0;
    double n_e = 0.0;
    double sigma2 = 0.0;
    CapacityBound q_lb;
};

inline constexpr double kUnitEtaTolerance = 1e-9;
inline constexpr double kInfiniteCapacitySigma2 = 1e-15;

double transmissivity(const GaussianChannel& c);

/// n_e = sqrt(det N) / (2|1 - eta|) - 1/2, or sigma^2 = sqrt(det N) when eta = 1.
NoiseFigures added_noise(const GaussianChannel& c);

/// g(n) = (n+1) log2(n+1) - n log2 n, with g(0) = 0.
double g_entropy(double n);

/// max{0, log2|eta/(1-eta)| - g(n_e)}; at eta = 1, max{0, log2(2/(e sigma^2))}
/// and infinite when sigma^2 < 1e-15. Throws PreconditionError for eta < 0.
CapacityBound capacity_lower_bound(double eta, double n_e, double sigma2);

ChannelMetrics evaluate_channel(const GaussianChannel& c);

/// Printed stability bound Cnu < (1+Cg)^2/4.
bool stability_check(double cg, double cnu);

/// Full on-resonance Routh-Hurwitz criterion: the printed bound together with
/// sqrt(Cnu) < (1 + kappa_o/kappa_e)/2.
bool stability_check_exact(double cg, double cnu, double kappa_ratio);

/// 4 Cg zo ze / ((1+Cg)^2 - 4 Cnu). Throws StabilityError when unstable.
double eta_closed_form(double cg, double cnu, double zeta_o = 1.0, double zeta_e = 1.0);

/// Detuned transmissivity with chi = Delta/kappa. Throws SingularityError on a
/// nonpositive denominator.
double eta_detuned(double cg, double cnu, double chi_o, double chi_e, double zeta_o = 1.0,
                   double zeta_e = 1.0);

/// Frequency-resolved transmissivity of the resonant system.
/// Requires delta_o = delta_e = 0; throws StabilityError when unstable.
double eta_bandwidth(const SystemParams& p, double omega);

/// Cnu = (1 - Cg)^2 / 4.
double half_matching_cnu(double cg);

/// Bose-Einstein occupancy at frequency (Hz) and temperature (K).
double thermal_occupancy(double frequency_hz, double temperature_k);
/// log10 of the occupancy, finite even when the occupancy underflows.
double log10_thermal_occupancy(double frequency_hz, double temperature_k);

enum class SqueezingConvention {
    Caption,   // 10 log10 e^{4 lambda}
    Variance,  // 10 log10 e^{2 lambda}
};

double squeezing_db(double lambda, SqueezingConvention convention = SqueezingConvention::Caption);

}  // namespace transduction
