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

#include "transduction/checks.hpp"

#include "transduction/bogoliubov.hpp"
#include "transduction/kernels.hpp"
#include "transduction/matching.hpp"
#include "transduction/metrics.hpp"
#include "transduction/table.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace transduction {

namespace {

using Check = std::function<std::string(bool&)>;

std::string worst(const char* what, double value) { return std::string(what) + " " + format_value(value); }

SystemParams random_stable(std::mt19937_64& rng, bool unit_extraction) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        const double cg = 0.01 + 2.99 * u(rng);
        const double cnu = 0.9 * (1.0 + cg) * (1.0 + cg) / 4.0 * u(rng);
        SystemParams p = SystemParams::from_cooperativities(cg, cnu, 0.5 + 2.0 * u(rng), 0.5 + 2.0 * u(rng));
        p.theta = 2.0 * M_PI * u(rng);
        if (!unit_extraction) {
            p.zeta_o = 0.5 + 0.5 * u(rng);
            p.zeta_e = 0.5 + 0.5 * u(rng);
            p.delta_o = 0.4 * (u(rng) - 0.5);
            p.delta_e = 0.4 * (u(rng) - 0.5);
        }
        if (spectrally_stable(p)) {
            return p;
        }
    }
}

std::string symplecticity(bool& ok) {
    std::mt19937_64 rng(11);
    double max_res = 0.0;
    for (int i = 0; i < 200; ++i) {
        max_res = std::max(max_res, symplectic_residual(scattering_quadrature(random_stable(rng, true)).values()));
    }
    ok = max_res < 1e-10;
    return worst("max residual", max_res);
}

std::string closed_form(bool& ok) {
    double max_rel = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double cg = 0.01 + (3.0 - 0.01) * i / 19.0;
        for (int j = 0; j < 20; ++j) {
            const double cnu = 0.9 * (1.0 + cg) * (1.0 + cg) / 4.0 * j / 19.0;
            const SystemParams p = SystemParams::from_cooperativities(cg, cnu, 100.0, 0.2);
            const double numeric = transmissivity(extract_channel(p, 0.0, Direction::OpticalToMicrowave, {}));
            const double closed = eta_closed_form(cg, cnu);
            max_rel = std::max(max_rel, std::abs(numeric - closed) / closed);
        }
    }
    ok = max_rel < 1e-10;
    return worst("max relative error", max_rel);
}

std::string complete_positivity(bool& ok) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ok = true;
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        const SystemParams p = random_stable(rng, false);
        const BathSpec baths = i % 2 ? BathSpec::microwave_thermal(2.0 * u(rng))
                                     : BathSpec::microwave_squeezed(u(rng), 2.0 * M_PI * u(rng), u(rng));
        for (Direction d : {Direction::OpticalToMicrowave, Direction::MicrowaveToOptical}) {
            const GaussianChannel ch = extract_channel(p, 0.3 * (u(rng) - 0.5), d, baths);
            if (!cp_check(ch.T, ch.N, 1e-9)) {
                ++failures;
            }
        }
    }
    ok = failures == 0;
    return std::to_string(failures) + " of 400 channels violate complete positivity";
}

std::string reciprocity(bool& ok) {
    std::mt19937_64 rng(13);
    double max_diff = 0.0;
    for (int i = 0; i < 100; ++i) {
        const SystemParams p = random_stable(rng, false);
        const QuadratureMatrix s = scattering_quadrature(p, 0.05);
        const double a = transmissivity(extract_channel(s, Direction::OpticalToMicrowave, {}));
        const double b = transmissivity(extract_channel(s, Direction::MicrowaveToOptical, {}));
        max_diff = std::max(max_diff, std::abs(a - b));
    }
    ok = max_diff < 1e-10;
    return worst("max |eta_o2m - eta_m2o|", max_diff);
}

std::string bloch_messiah_reconstruction(bool& ok) {
    std::mt19937_64 rng(14);
    double max_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const QuadratureMatrix s = scattering_quadrature(random_stable(rng, i % 2 == 0));
        const BlochMessiahFactors f = bloch_messiah(s);
        max_err = std::max(max_err, (f.reconstruct() - s.values()).cwiseAbs().maxCoeff());
    }
    ok = max_err < 1e-9;
    return worst("max reconstruction error", max_err);
}

std::string half_matching(bool& ok) {
    ok = true;
    std::string detail;
    for (double cg : {0.1, 0.25, 0.5, 2.0, 4.0}) {
        SystemParams p = SystemParams::from_cooperativities(cg, half_matching_cnu(cg));
        p.theta = kMatchingPumpPhase;
        const auto form = detect_half_matched(coupling_block(scattering_quadrature(p)));
        if (!form) {
            ok = false;
            detail += " Cg=" + format_value(cg) + " not detected;";
            continue;
        }
        const ComposedChannels c = compose(form->canonical, perfect_transduction_plan(*form, 1.0));
        const double det_t = c.a_to_b.T.determinant();
        const double det_n = c.a_to_b.N.determinant();
        if (std::abs(det_t - 1.0) > 1e-12 || std::abs(det_n) > 1e-12) {
            ok = false;
            detail += " Cg=" + format_value(cg) + " plan det T " + format_value(det_t) + ";";
        }
    }
    return detail.empty() ? "detected and perfected for Cg in {0.1, 0.25, 0.5, 2, 4}" : detail;
}

std::string bogoliubov_identities(bool& ok) {
    double max_err = 0.0;
    for (int k = 1; k <= 19; ++k) {
        const double beta = 0.05 * k;
        SystemParams p = SystemParams::from_cooperativities(0.3, 0.0);
        p.delta_e = 10.0;
        p.nu = beta * p.delta_e / 2.0;
        const BogoliubovFrame f = build_frame(p);
        max_err = std::max(max_err, std::abs(std::cosh(2.0 * f.r) * std::sqrt(1.0 - beta * beta) - 1.0));
        max_err = std::max(max_err, std::abs(f.c_s - p.cg() * std::cosh(f.r) * std::cosh(f.r)) / f.c_s);
        const EliminationParams e = elimination_params(f.r, p.theta);
        max_err = std::max(max_err, squeezed_bath_noise(f.r, e.lambda, p.theta, e.phi));
    }
    ok = max_err < 1e-12;
    return worst("max identity error", max_err);
}

std::string kernel_equivalence(bool& ok) {
    if (!kernels::isa_supported(kernels::Isa::Avx2)) {
        ok = true;
        return "avx2 variant unavailable; scalar only";
    }
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-1.0, 3.0);
    const std::size_t n = 1027;
    std::vector<double> a(n), b(n), c(n), d(n), e(n), f(n), g(n), x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = u(rng), b[i] = u(rng), c[i] = u(rng), d[i] = u(rng), e[i] = u(rng), f[i] = u(rng), g[i] = u(rng);
    }
    std::size_t mismatches = 0;
    auto compare = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            const bool same = (std::isnan(x[i]) && std::isnan(y[i])) || x[i] == y[i];
            mismatches += same ? 0 : 1;
        }
    };
    using kernels::Isa;
    kernels::eta_resonant(a, b, c, d, x, Isa::Scalar);
    kernels::eta_resonant(a, b, c, d, y, Isa::Avx2);
    compare();
    kernels::eta_detuned(a, b, c, d, e, f, x, Isa::Scalar);
    kernels::eta_detuned(a, b, c, d, e, f, y, Isa::Avx2);
    compare();
    kernels::eta_bandwidth(a, b, c, d, e, f, g, x, Isa::Scalar);
    kernels::eta_bandwidth(a, b, c, d, e, f, g, y, Isa::Avx2);
    compare();
    kernels::eta_beam_splitter(a, b, c, x, Isa::Scalar);
    kernels::eta_beam_splitter(a, b, c, y, Isa::Avx2);
    compare();
    ok = mismatches == 0;
    return std::to_string(mismatches) + " bitwise mismatches between scalar and avx2";
}

}  // namespace

std::vector<CheckResult> run_invariant_checks() {
    const std::vector<std::pair<const char*, Check>> checks{
        {"symplectic_scattering", symplecticity},
        {"closed_form_transmissivity", closed_form},
        {"complete_positivity", complete_positivity},
        {"transmissivity_reciprocity", reciprocity},
        {"bloch_messiah_reconstruction", bloch_messiah_reconstruction},
        {"half_matching_plans", half_matching},
        {"bogoliubov_identities", bogoliubov_identities},
        {"kernel_equivalence", kernel_equivalence},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : checks) {
        CheckResult r;
        r.name = name;
        try {
            r.detail = fn(r.passed);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace transduction
