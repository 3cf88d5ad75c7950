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

#include "transduction/metrics.hpp"

#include "transduction/detail/closed_forms.hpp"
#include "transduction/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace transduction {

namespace {

constexpr double kPlanck = 6.62607015e-34;
constexpr double kBoltzmann = 1.380649e-23;

double log_occupancy(double frequency_hz, double temperature_k) {
    if (!(frequency_hz > 0.0) || !(temperature_k > 0.0)) {
        throw PreconditionError("thermal_occupancy needs positive frequency and temperature");
    }
    const double x = kPlanck * frequency_hz / (kBoltzmann * temperature_k);
    if (x > 1.0) {
        return -(x + std::log1p(-std::exp(-x)));
    }
    return -std::log(std::expm1(x));
}

}  // namespace

double CapacityBound::value() const noexcept {
    return infinite ? std::numeric_limits<double>::infinity() : bits;
}

double transmissivity(const GaussianChannel& c) { return c.T.determinant(); }

NoiseFigures added_noise(const GaussianChannel& c) {
    const double eta = transmissivity(c);
    const double sigma2 = std::sqrt(std::max(0.0, c.N.determinant()));
    NoiseFigures out;
    out.sigma2 = sigma2;
    if (std::abs(eta - 1.0) <= kUnitEtaTolerance) {
        out.unit_branch = true;
        return out;
    }
    out.n_e = std::max(0.0, sigma2 / (2.0 * std::abs(1.0 - eta)) - 0.5);
    return out;
}

double g_entropy(double n) {
    if (n <= 0.0) {
        return 0.0;
    }
    return (n + 1.0) * std::log2(n + 1.0) - n * std::log2(n);
}

CapacityBound capacity_lower_bound(double eta, double n_e, double sigma2) {
    if (eta < 0.0 || std::isnan(eta)) {
        throw PreconditionError("capacity_lower_bound needs eta >= 0");
    }
    CapacityBound q;
    if (std::abs(eta - 1.0) <= kUnitEtaTolerance) {
        if (sigma2 < kInfiniteCapacitySigma2) {
            q.infinite = true;
            return q;
        }
        q.bits = std::max(0.0, std::log2(2.0 / (std::exp(1.0) * sigma2)));
        return q;
    }
    if (eta == 0.0) {
        return q;
    }
    q.bits = std::max(0.0, std::log2(std::abs(eta / (1.0 - eta))) - g_entropy(n_e));
    return q;
}

ChannelMetrics evaluate_channel(const GaussianChannel& c) {
    ChannelMetrics m;
    m.eta = transmissivity(c);
    const NoiseFigures noise = added_noise(c);
    m.n_e = noise.n_e;
    m.sigma2 = noise.sigma2;
    m.q_lb = capacity_lower_bound(std::max(0.0, m.eta), m.n_e, m.sigma2);
    return m;
}

bool stability_check(double cg, double cnu) { return cnu < (1.0 + cg) * (1.0 + cg) / 4.0; }

bool stability_check_exact(double cg, double cnu, double kappa_ratio) {
    return stability_check(cg, cnu) && std::sqrt(cnu) < (1.0 + kappa_ratio) / 2.0;
}

double eta_closed_form(double cg, double cnu, double zeta_o, double zeta_e) {
    if (!stability_check(cg, cnu)) {
        throw StabilityError("unstable: Cnu = " + std::to_string(cnu) + " >= (1+Cg)^2/4");
    }
    return detail::eta_resonant(cg, cnu, zeta_o, zeta_e);
}

double eta_detuned(double cg, double cnu, double chi_o, double chi_e, double zeta_o, double zeta_e) {
    const double eta = detail::eta_detuned(cg, cnu, chi_o, chi_e, zeta_o, zeta_e);
    if (std::isnan(eta)) {
        throw SingularityError("detuned transmissivity denominator is not positive",
                               std::numeric_limits<double>::infinity());
    }
    return eta;
}

double eta_bandwidth(const SystemParams& p, double omega) {
    p.validate();
    if (p.delta_o != 0.0 || p.delta_e != 0.0) {
        throw PreconditionError("eta_bandwidth is defined on resonance (zero detunings)");
    }
    const double cg = p.cg();
    const double cnu = p.cnu();
    if (!stability_check(cg, cnu)) {
        throw StabilityError("unstable: Cnu = " + std::to_string(cnu) + " >= (1+Cg)^2/4");
    }
    return detail::eta_bandwidth(cg, cnu, p.kappa_o, p.kappa_e, omega, p.zeta_o, p.zeta_e);
}

double half_matching_cnu(double cg) {
    if (cg < 0.0) {
        throw PreconditionError("half_matching_cnu needs Cg >= 0");
    }
    return (1.0 - cg) * (1.0 - cg) / 4.0;
}

double thermal_occupancy(double frequency_hz, double temperature_k) {
    return std::exp(log_occupancy(frequency_hz, temperature_k));
}

double log10_thermal_occupancy(double frequency_hz, double temperature_k) {
    return log_occupancy(frequency_hz, temperature_k) / std::log(10.0);
}

double squeezing_db(double lambda, SqueezingConvention convention) {
    if (lambda < 0.0) {
        throw PreconditionError("squeezing_db needs lambda >= 0");
    }
    const double exponent = convention == SqueezingConvention::Caption ? 4.0 * lambda : 2.0 * lambda;
    return 10.0 * exponent / std::log(10.0);
}

}  // namespace transduction
