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

#include "transduction/bogoliubov.hpp"

#include "transduction/detail/closed_forms.hpp"
#include "transduction/errors.hpp"

#include <algorithm>
#include <cmath>

namespace transduction {

double effective_squeezing(double nu, double delta_e) {
    if (nu < 0.0 || !(delta_e > 2.0 * nu)) {
        throw RegimeError("Bogoliubov frame needs Delta_e > 2 nu >= 0 (beta < 1)");
    }
    return 0.5 * std::atanh(2.0 * nu / delta_e);
}

BogoliubovFrame build_frame(const SystemParams& p, const FrameOptions& options) {
    p.validate();
    effective_squeezing(p.nu, p.delta_e);
    BogoliubovFrame f;
    f.beta = 2.0 * p.nu / p.delta_e;
    if (options.cap_beta && f.beta > options.beta_cap) {
        f.beta = options.beta_cap;
        f.beta_capped = true;
    }
    f.r = 0.5 * std::atanh(f.beta);
    f.omega_s = p.delta_e * std::sqrt(1.0 - f.beta * f.beta);
    f.g_s = p.g * std::cosh(f.r);
    f.kappa_s = p.kappa_e;
    f.c_s = 4.0 * f.g_s * f.g_s / (p.kappa_o * f.kappa_s);
    f.zeta_s = p.zeta_e;
    return f;
}

double eta_bogoliubov(double c_s, double zeta_o, double zeta_s) {
    if (c_s < 0.0) {
        throw PreconditionError("eta_bogoliubov needs C_s >= 0");
    }
    return detail::eta_beam_splitter(c_s, zeta_o, zeta_s);
}

double amplified_noise(double r, double n_th) {
    if (r < 0.0 || n_th < 0.0) {
        throw PreconditionError("amplified_noise needs r >= 0 and n_th >= 0");
    }
    const double s = std::sinh(r);
    return std::cosh(2.0 * r) * n_th + s * s;
}

double squeezed_bath_noise(double r, double lambda, double theta, double phi, double n_th) {
    if (r < 0.0 || lambda < 0.0 || n_th < 0.0) {
        throw PreconditionError("squeezed_bath_noise needs r, lambda, n_th >= 0");
    }
    const double cr = std::cosh(r);
    const double sr = std::sinh(r);
    const double cl = std::cosh(lambda);
    const double sl = std::sinh(lambda);
    // |coefficient of b_th^dagger|^2 in the Bogoliubov-mode bath operator.
    const double b2 = cr * cr * sl * sl + sr * sr * cl * cl +
                      0.5 * std::cos(theta - phi) * std::sinh(2.0 * r) * std::sinh(2.0 * lambda);
    return std::max(0.0, b2) * (2.0 * n_th + 1.0) + n_th;
}

EliminationParams elimination_params(double r, double theta) {
    if (r < 0.0) {
        throw PreconditionError("elimination_params needs r >= 0");
    }
    return {r, theta - M_PI};
}

RwaReport rwa_validity(const SystemParams& p, const BogoliubovFrame& frame, const RwaThresholds& thresholds) {
    RwaReport rep;
    rep.coupling_ratio = frame.g_s / frame.omega_s;
    const double ado = std::abs(p.delta_o);
    rep.detuning_ratio = std::abs(ado - frame.omega_s) / (ado + frame.omega_s);
    rep.coupling_ok = rep.coupling_ratio < thresholds.coupling;
    rep.detuning_ok = rep.detuning_ratio < thresholds.detuning;
    return rep;
}

ChannelMetrics loss_channel_metrics(double eta, double occupancy) {
    if (eta < 0.0 || eta > 1.0 || occupancy < 0.0) {
        throw PreconditionError("loss channel needs 0 <= eta <= 1 and occupancy >= 0");
    }
    // Same branches as added_noise on T = sqrt(eta) I, N = (1-eta)(2n+1) I,
    // without rounding eta through sqrt(eta)^2.
    ChannelMetrics m;
    m.eta = eta;
    m.sigma2 = (1.0 - eta) * (2.0 * occupancy + 1.0);
    if (std::abs(eta - 1.0) > kUnitEtaTolerance) {
        m.n_e = std::max(0.0, m.sigma2 / (2.0 * (1.0 - eta)) - 0.5);
    }
    m.q_lb = capacity_lower_bound(eta, m.n_e, m.sigma2);
    return m;
}

ChannelMetrics bogoliubov_channel_metrics(const SystemParams& p, bool eliminate_noise, const FrameOptions& options) {
    const BogoliubovFrame f = build_frame(p, options);
    const double eta = eta_bogoliubov(f.c_s, p.zeta_o, f.zeta_s);
    return loss_channel_metrics(eta, eliminate_noise ? p.n_th : amplified_noise(f.r, p.n_th));
}

RwaComparison compare_rwa(const SystemParams& p, const FrameOptions& options) {
    const BogoliubovFrame f = build_frame(p, options);
    SystemParams bs = p;
    bs.g = f.g_s;
    bs.nu = 0.0;
    bs.delta_e = f.omega_s;
    bs.kappa_e = f.kappa_s;
    bs.zeta_e = f.zeta_s;
    const GaussianChannel ch = extract_channel(bs, f.omega_s, Direction::OpticalToMicrowave, BathSpec::vacuum());

    RwaComparison c;
    c.eta_rwa = eta_bogoliubov(f.c_s, p.zeta_o, f.zeta_s);
    c.eta_scattering = transmissivity(ch);
    c.discrepancy = c.eta_scattering - c.eta_rwa;
    return c;
}

}  // namespace transduction
