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

// Effective-squeezing (Bogoliubov) picture of the detuned, parametrically
// driven microwave resonator.

#include "transduction/metrics.hpp"
#include "transduction/model.hpp"

namespace transduction {

inline constexpr double kDefaultBetaCap = 0.999;

struct BogoliubovFrame {
    double beta = 0.0;     // 2 nu / Delta_e
    double r = 0.0;        // tanh 2r = beta
    double g_s = 0.0;      // g cosh r
    double omega_s = 0.0;  // sqrt(Delta_e^2 - 4 nu^2)
    double kappa_s = 0.0;  // = kappa_e
    double c_s = 0.0;      // 4 g_s^2 / (kappa_o kappa_s)
    double zeta_s = 0.0;   // = zeta_e
    bool beta_capped = false;
};

struct FrameOptions {
    bool cap_beta = true;
    double beta_cap = kDefaultBetaCap;
};

/// r = artanh(2 nu / Delta_e) / 2. Throws RegimeError unless Delta_e > 2 nu >= 0.
double effective_squeezing(double nu, double delta_e);

/// Throws RegimeError outside the unitary regime. With `cap_beta`, beta above
/// the cap is clamped and `beta_capped` set.
BogoliubovFrame build_frame(const SystemParams& p, const FrameOptions& options = {});

/// 4 C_s / (1 + C_s)^2 zeta_o zeta_s.
double eta_bogoliubov(double c_s, double zeta_o, double zeta_s);

/// cosh(2r) n_th + sinh^2(r).
double amplified_noise(double r, double n_th);

/// Occupancy of the Bogoliubov-mode bath when the microwave input is a
/// squeezed thermal state (lambda, phi, n_th).
double squeezed_bath_noise(double r, double lambda, double theta, double phi, double n_th = 0.0);

struct EliminationParams {
    double lambda = 0.0;
    double phi = 0.0;
};

/// lambda = r, phi = theta - pi.
EliminationParams elimination_params(double r, double theta);

struct RwaThresholds {
    double coupling = 1.0;  // g_s / omega_s must stay below
    double detuning = 0.1;  // | |Delta_o| - omega_s | / (|Delta_o| + omega_s) must stay below
};

struct RwaReport {
    double coupling_ratio = 0.0;
    double detuning_ratio = 0.0;
    bool coupling_ok = false;
    bool detuning_ok = false;

    bool ok() const noexcept { return coupling_ok && detuning_ok; }
};

RwaReport rwa_validity(const SystemParams& p, const BogoliubovFrame& frame, const RwaThresholds& thresholds = {});

/// Metrics of the loss channel T = sqrt(eta) I, N = (1 - eta)(2 occupancy + 1) I.
ChannelMetrics loss_channel_metrics(double eta, double occupancy);

/// Pure-loss channel in the Bogoliubov frame: eta = eta_bogoliubov, bath
/// occupancy amplified_noise(r, n_th), or n_th when the squeezing-induced
/// noise is eliminated.
ChannelMetrics bogoliubov_channel_metrics(const SystemParams& p, bool eliminate_noise,
                                          const FrameOptions& options = {});

struct RwaComparison {
    double eta_rwa = 0.0;        // closed form, matched detuning assumed
    double eta_scattering = 0.0;  // beam-splitter Langevin model in the Bogoliubov frame
    double discrepancy = 0.0;    // eta_scattering - eta_rwa
};

/// Evaluates the Bogoliubov-frame beam splitter (g_s, omega_s, kappa_s,
/// zeta_s, the actual Delta_o) numerically at w = omega_s and compares it with
/// the closed form, which assumes Delta_o = -omega_s.
RwaComparison compare_rwa(const SystemParams& p, const FrameOptions& options = {});

}  // namespace transduction
