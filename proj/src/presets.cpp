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
#include "transduction/sweep.hpp"

#include <functional>

namespace transduction {

namespace {

// Device rates in MHz: kappa_o = 100, kappa_e = 0.2 (the model defaults).
// Heat maps default to 200 x 200.

struct Preset {
    const char* name;
    const char* description;
    std::function<void(SweepConfig&)> build;
};

Axis cg_log() { return Axis::range("Cg", 1e-3, 10.0, 400, true); }
Axis cg_map() { return Axis::range("Cg", 0.01, 2.0, 200); }
Axis cnu_map() { return Axis::range("Cnu", 0.0, 1.0, 200); }
Axis beta_map() { return Axis::range("beta", 0.0, 0.99, 200); }
Axis cg_map_log() { return Axis::range("Cg", 1e-3, 10.0, 200, true); }
Axis beta_curves() { return Axis::list("beta", {0.0, 0.8, 0.95}); }
Axis with_and_without_elimination() { return Axis::list("eliminate", {0.0, 1.0}); }

void lossy_bogoliubov(SweepConfig& c) {
    c.fixed["zeta_e"] = 0.97;
    c.fixed["zeta_o"] = 0.9;
}

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all{
        {"fig2a", "eta vs Cg for Cnu in {0, 0.1, 0.2}, unit extraction",
         [](SweepConfig& c) { c.axes = {Axis::list("Cnu", {0.0, 0.1, 0.2}), cg_log()}; }},
        {"fig2b", "Q_LB map over (Cnu, Cg), unit extraction",
         [](SweepConfig& c) { c.axes = {cnu_map(), cg_map()}; }},
        {"fig2c", "added noise n_e over (zeta_o, zeta_e) at Cg = 0.14, Cnu = 0.16",
         [](SweepConfig& c) {
             c.fixed["Cg"] = 0.14;
             c.fixed["Cnu"] = 0.16;
             c.axes = {Axis::range("zeta_o", 0.5, 1.0, 200), Axis::range("zeta_e", 0.5, 1.0, 200)};
         }},
        {"fig2d", "Q_LB map over (Cnu, Cg) with zeta_o = 0.95, zeta_e = 0.99",
         [](SweepConfig& c) {
             c.fixed["zeta_o"] = 0.95;
             c.fixed["zeta_e"] = 0.99;
             c.axes = {cnu_map(), cg_map()};
         }},
        {"fig2e", "eta over detunings (chi_o, chi_e) at Cg = 0.4, Cnu = 0.15, zeta_o = 0.95, zeta_e = 0.99",
         [](SweepConfig& c) {
             c.fixed["Cg"] = 0.4;
             c.fixed["Cnu"] = 0.15;
             c.fixed["zeta_o"] = 0.95;
             c.fixed["zeta_e"] = 0.99;
             c.axes = {Axis::range("chi_o", -1.0, 1.0, 201), Axis::range("chi_e", -1.0, 1.0, 201)};
         }},
        {"fig3a", "coupling enhancement g_s/g, C_s and amplified noise vs beta = 2 nu / Delta_e",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.axes = {Axis::range("beta", 0.0, 0.999, 400)};
         }},
        {"fig3b", "eta_s vs Cg for beta = 2 nu / Delta_e in {0, 0.8, 0.95}, unit extraction",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.axes = {beta_curves(), cg_log()};
         }},
        {"fig3c", "Q_LB vs Cg for beta = 2 nu / Delta_e in {0, 0.8, 0.95}, with and without noise elimination",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.axes = {with_and_without_elimination(), beta_curves(), cg_log()};
         }},
        {"fig3d", "Q_LB vs Cg for beta = 2 nu / Delta_e in {0, 0.95}, zeta_e = 0.97, zeta_o = 0.9",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             lossy_bogoliubov(c);
             c.axes = {with_and_without_elimination(), Axis::list("beta", {0.0, 0.95}), cg_log()};
         }},
        {"appfig1", "eta vs omega (MHz) for Cnu in {0, 0.1, 0.2}, Cg = 0.1",
         [](SweepConfig& c) {
             c.fixed["Cg"] = 0.1;
             c.axes = {Axis::list("Cnu", {0.0, 0.1, 0.2}), Axis::range("omega", -0.5, 0.5, 401)};
         }},
        {"fig5a", "Q_LB map over (beta = 2 nu / Delta_e, Cg), unit extraction, amplified noise",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.axes = {beta_map(), cg_map_log()};
         }},
        {"fig5b", "Q_LB vs Cg for beta = 2 nu / Delta_e in {0, 0.8, 0.95}, unit extraction, with and without elimination",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.axes = {with_and_without_elimination(), beta_curves(), cg_log()};
         }},
        {"fig5c", "Q_LB map over (beta = 2 nu / Delta_e, Cg), unit extraction, noise eliminated",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             c.eliminate_noise = true;
             c.axes = {beta_map(), cg_map_log()};
         }},
        {"fig5d", "Q_LB map over (beta = 2 nu / Delta_e, Cg), zeta_e = 0.97, zeta_o = 0.9, amplified noise",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             lossy_bogoliubov(c);
             c.axes = {beta_map(), cg_map_log()};
         }},
        {"fig5e", "Q_LB vs Cg for beta = 2 nu / Delta_e in {0, 0.8, 0.95}, zeta_e = 0.97, zeta_o = 0.9, with and without elimination",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             lossy_bogoliubov(c);
             c.axes = {with_and_without_elimination(), beta_curves(), cg_log()};
         }},
        {"fig5f", "Q_LB map over (beta = 2 nu / Delta_e, Cg), zeta_e = 0.97, zeta_o = 0.9, noise eliminated",
         [](SweepConfig& c) {
             c.model = SweepModel::Bogoliubov;
             lossy_bogoliubov(c);
             c.eliminate_noise = true;
             c.axes = {beta_map(), cg_map_log()};
         }},
    };
    return all;
}

}  // namespace

std::vector<PresetInfo> list_presets() {
    std::vector<PresetInfo> out;
    for (const auto& p : presets()) {
        out.push_back({p.name, p.description});
    }
    return out;
}

SweepConfig preset_config(const std::string& name) {
    for (const auto& p : presets()) {
        if (name == p.name) {
            SweepConfig c;
            c.preset = p.name;
            c.description = p.description;
            p.build(c);
            return c;
        }
    }
    throw ConfigError("unknown preset '" + name + "' (see `transduction_lab presets`)");
}

}  // namespace transduction
