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

#include "transduction/sweep.hpp"

#include "transduction/bogoliubov.hpp"
#include "transduction/errors.hpp"
#include "transduction/kernels.hpp"
#include "transduction/matching.hpp"
#include "transduction/metrics.hpp"
#include "transduction/version.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <thread>

namespace transduction {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kScatteringColumns{"stable", "eta", "eta_closed", "n_e", "sigma2", "Q_LB"};
const std::vector<std::string> kBogoliubovColumns{"stable", "beta_eff", "r", "g_ratio", "C_s", "n_nu", "eta",
                                                  "n_e", "sigma2", "Q_LB", "rwa_coupling", "rwa_detuning",
                                                  "rwa_ok", "beta_capped"};

using Params = std::map<std::string, double>;

double get(const Params& p, const char* name) { return p.at(name); }

SystemParams scattering_params(const Params& q) {
    SystemParams p = SystemParams::from_cooperativities(get(q, "Cg"), get(q, "Cnu"), get(q, "kappa_o"),
                                                        get(q, "kappa_e"));
    p.zeta_o = get(q, "zeta_o");
    p.zeta_e = get(q, "zeta_e");
    p.delta_o = get(q, "chi_o") * p.kappa_o;
    p.delta_e = get(q, "chi_e") * p.kappa_e;
    p.theta = get(q, "theta");
    p.n_th = get(q, "n_th");
    return p;
}

BathSpec scattering_baths(const Params& q) {
    const double lambda = get(q, "lambda");
    if (lambda != 0.0) {
        return BathSpec::microwave_squeezed(lambda, get(q, "phi"), get(q, "n_th"),
                                            get(q, "squeeze_coupling_only") != 0.0);
    }
    return BathSpec::microwave_thermal(get(q, "n_th"));
}

// Bogoliubov model: Delta_e = chi_e kappa_e, nu = beta Delta_e / 2, and
// Delta_o = -omega_s unless chi_o is given.
SystemParams bogoliubov_params(const Params& q) {
    SystemParams p = SystemParams::from_cooperativities(get(q, "Cg"), 0.0, get(q, "kappa_o"), get(q, "kappa_e"));
    p.zeta_o = get(q, "zeta_o");
    p.zeta_e = get(q, "zeta_e");
    p.delta_e = get(q, "chi_e") * p.kappa_e;
    p.nu = get(q, "beta") * p.delta_e / 2.0;
    p.theta = get(q, "theta");
    p.n_th = get(q, "n_th");
    return p;
}

enum class ClosedForm { Resonant, Detuned, Bandwidth, None };

struct RowState {
    std::vector<double> values;
    ClosedForm closed = ClosedForm::None;
    bool stable = false;
    // Bogoliubov phase-two inputs.
    double c_s = 0.0;
    double zeta_o = 0.0;
    double zeta_s = 0.0;
    double occupancy = 0.0;
};

RowState scattering_row(const Params& q, Direction dir) {
    RowState s;
    s.values.assign(kScatteringColumns.size(), kNaN);
    const SystemParams p = scattering_params(q);
    s.stable = spectrally_stable(p);
    s.values[0] = s.stable ? 1.0 : 0.0;
    if (!s.stable) {
        return s;
    }
    const double omega = get(q, "omega");
    const GaussianChannel ch = extract_channel(p, omega, dir, scattering_baths(q));
    const ChannelMetrics m = evaluate_channel(ch);
    s.values[1] = m.eta;
    s.values[3] = m.n_e;
    s.values[4] = m.sigma2;
    s.values[5] = m.q_lb.value();
    const bool resonant = p.delta_o == 0.0 && p.delta_e == 0.0;
    s.closed = resonant ? (omega == 0.0 ? ClosedForm::Resonant : ClosedForm::Bandwidth)
                        : (omega == 0.0 ? ClosedForm::Detuned : ClosedForm::None);
    return s;
}

RowState bogoliubov_row(const Params& q, bool eliminate_default) {
    RowState s;
    s.values.assign(kBogoliubovColumns.size(), kNaN);
    SystemParams p = bogoliubov_params(q);
    BogoliubovFrame f;
    try {
        f = build_frame(p);
    } catch (const RegimeError&) {
        s.values[0] = 0.0;
        return s;
    }
    s.stable = true;
    const double chi_o = get(q, "chi_o");
    p.delta_o = std::isnan(chi_o) ? -f.omega_s : chi_o * p.kappa_o;
    const RwaReport rwa = rwa_validity(p, f);
    const double elim = get(q, "eliminate");
    const bool eliminate = std::isnan(elim) ? eliminate_default : elim != 0.0;

    s.c_s = f.c_s;
    s.zeta_o = p.zeta_o;
    s.zeta_s = f.zeta_s;
    s.occupancy = eliminate ? p.n_th : amplified_noise(f.r, p.n_th);
    s.values[0] = 1.0;
    s.values[1] = f.beta;
    s.values[2] = f.r;
    s.values[3] = std::cosh(f.r);
    s.values[4] = f.c_s;
    s.values[5] = s.occupancy;
    s.values[10] = rwa.coupling_ratio;
    s.values[11] = rwa.detuning_ratio;
    s.values[12] = rwa.ok() ? 1.0 : 0.0;
    s.values[13] = f.beta_capped ? 1.0 : 0.0;
    return s;
}

std::vector<Params> grid_points(const SweepConfig& cfg) {
    Params base = default_parameters(cfg.model);
    for (const auto& [k, v] : cfg.fixed) {
        base[k] = v;
    }
    if (cfg.model == SweepModel::Bogoliubov && std::isnan(base["eliminate"])) {
        base["eliminate"] = cfg.eliminate_noise ? 1.0 : 0.0;
    }
    std::size_t total = 1;
    for (const auto& a : cfg.axes) {
        total *= a.values.size();
    }
    std::vector<Params> points;
    points.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        Params q = base;
        std::size_t rem = i;
        for (std::size_t k = cfg.axes.size(); k-- > 0;) {
            const auto& a = cfg.axes[k];
            q[a.name] = a.values[rem % a.values.size()];
            rem /= a.values.size();
        }
        points.push_back(std::move(q));
    }
    return points;
}

std::vector<RowState> evaluate_rows(const SweepConfig& cfg, const std::vector<Params>& points) {
    std::vector<RowState> rows(points.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(sweep_threads(cfg.threads),
                                                             static_cast<unsigned>(std::max<std::size_t>(1, points.size()))));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::size_t> error_index(workers, points.size());

    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < points.size(); i += workers) {
            try {
                rows[i] = cfg.model == SweepModel::Scattering ? scattering_row(points[i], cfg.direction)
                                                              : bogoliubov_row(points[i], cfg.eliminate_noise);
            } catch (...) {
                errors[w] = std::current_exception();
                error_index[w] = i;
                return;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    // Report the failure with the lowest row index, independent of scheduling.
    const auto first = std::min_element(error_index.begin(), error_index.end());
    if (*first < points.size()) {
        std::rethrow_exception(errors[static_cast<std::size_t>(first - error_index.begin())]);
    }
    return rows;
}

void fill_closed_forms(const std::vector<Params>& points, std::vector<RowState>& rows) {
    const std::size_t n = points.size();
    std::vector<double> cg(n), cnu(n), xo(n), xe(n), zo(n), ze(n), ko(n), ke(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Params& q = points[i];
        cg[i] = get(q, "Cg");
        cnu[i] = get(q, "Cnu");
        xo[i] = get(q, "chi_o");
        xe[i] = get(q, "chi_e");
        zo[i] = get(q, "zeta_o");
        ze[i] = get(q, "zeta_e");
        ko[i] = get(q, "kappa_o");
        ke[i] = get(q, "kappa_e");
        w[i] = get(q, "omega");
    }
    const kernels::Isa isa = kernels::active_isa();
    std::vector<double> resonant(n), detuned(n), bandwidth(n);
    kernels::eta_resonant(cg, cnu, zo, ze, resonant, isa);
    kernels::eta_detuned(cg, cnu, xo, xe, zo, ze, detuned, isa);
    kernels::eta_bandwidth(cg, cnu, ko, ke, w, zo, ze, bandwidth, isa);
    for (std::size_t i = 0; i < n; ++i) {
        double v = kNaN;
        switch (rows[i].closed) {
            case ClosedForm::Resonant:
                v = resonant[i];
                break;
            case ClosedForm::Detuned:
                v = detuned[i];
                break;
            case ClosedForm::Bandwidth:
                v = bandwidth[i];
                break;
            case ClosedForm::None:
                break;
        }
        rows[i].values[2] = v;
    }
}

void fill_bogoliubov_metrics(std::vector<RowState>& rows) {
    const std::size_t n = rows.size();
    std::vector<double> c(n), zo(n), zs(n), eta(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = rows[i].c_s;
        zo[i] = rows[i].zeta_o;
        zs[i] = rows[i].zeta_s;
    }
    kernels::eta_beam_splitter(c, zo, zs, eta, kernels::active_isa());
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].stable) {
            continue;
        }
        const ChannelMetrics m = loss_channel_metrics(eta[i], rows[i].occupancy);
        rows[i].values[6] = m.eta;
        rows[i].values[7] = m.n_e;
        rows[i].values[8] = m.sigma2;
        rows[i].values[9] = m.q_lb.value();
    }
}

std::string param_text(double v) {
    return std::isnan(v) ? "auto" : format_value(v);
}

}  // namespace

const char* to_string(SweepModel m) noexcept { return m == SweepModel::Bogoliubov ? "bogoliubov" : "scattering"; }

SweepModel parse_model(const std::string& text) {
    if (text == "scattering") {
        return SweepModel::Scattering;
    }
    if (text == "bogoliubov") {
        return SweepModel::Bogoliubov;
    }
    throw ConfigError("unknown model '" + text + "' (expected scattering or bogoliubov)");
}

const std::vector<std::string>& parameter_names(SweepModel m) {
    static const std::vector<std::string> scattering{"Cg",     "Cnu",  "kappa_o", "kappa_e", "zeta_o",
                                                     "zeta_e", "chi_o", "chi_e",  "theta",   "omega",
                                                     "n_th",   "lambda", "phi",   "squeeze_coupling_only"};
    static const std::vector<std::string> bogoliubov{"Cg",    "beta",  "kappa_o", "kappa_e", "zeta_o", "zeta_e",
                                                     "chi_o", "chi_e", "theta",   "n_th",    "eliminate"};
    return m == SweepModel::Bogoliubov ? bogoliubov : scattering;
}

std::map<std::string, double> default_parameters(SweepModel m) {
    if (m == SweepModel::Bogoliubov) {
        return {{"Cg", 0.1},     {"beta", 0.0},   {"kappa_o", 100.0}, {"kappa_e", 0.2},
                {"zeta_o", 1.0}, {"zeta_e", 1.0}, {"chi_o", kNaN},    {"chi_e", 100.0},
                {"theta", 0.0},  {"n_th", 0.0},   {"eliminate", kNaN}};
    }
    return {{"Cg", 0.1},    {"Cnu", 0.0},   {"kappa_o", 100.0}, {"kappa_e", 0.2}, {"zeta_o", 1.0},
            {"zeta_e", 1.0}, {"chi_o", 0.0}, {"chi_e", 0.0},     {"theta", kMatchingPumpPhase}, {"omega", 0.0},
            {"n_th", 0.0},   {"lambda", 0.0}, {"phi", 0.0},      {"squeeze_coupling_only", 0.0}};
}

void validate(const SweepConfig& cfg) {
    const auto& names = parameter_names(cfg.model);
    auto known = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    auto list = [&] {
        std::string s;
        for (const auto& n : names) {
            s += (s.empty() ? "" : ", ") + n;
        }
        return s;
    };
    for (const auto& [k, v] : cfg.fixed) {
        if (!known(k)) {
            throw ConfigError("unknown parameter '" + k + "' for the " + to_string(cfg.model) + " model (known: " +
                              list() + ")");
        }
    }
    std::set<std::string> seen;
    for (const auto& a : cfg.axes) {
        if (!known(a.name)) {
            throw ConfigError("unknown axis parameter '" + a.name + "' for the " + to_string(cfg.model) +
                              " model (known: " + list() + ")");
        }
        if (!seen.insert(a.name).second) {
            throw ConfigError("axis '" + a.name + "' given twice");
        }
        if (a.values.empty()) {
            throw ConfigError("axis '" + a.name + "' has no values");
        }
    }
}

ResultTable run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::vector<Params> points = grid_points(cfg);
    std::vector<RowState> rows = evaluate_rows(cfg, points);
    if (cfg.model == SweepModel::Scattering) {
        fill_closed_forms(points, rows);
    } else {
        fill_bogoliubov_metrics(rows);
    }

    ResultTable t;
    if (!cfg.preset.empty()) {
        t.metadata.emplace_back("preset", cfg.preset);
    }
    if (!cfg.description.empty()) {
        t.metadata.emplace_back("description", cfg.description);
    }
    t.metadata.emplace_back("model", to_string(cfg.model));
    t.metadata.emplace_back("direction", to_string(cfg.direction));
    t.metadata.emplace_back("version", kVersion);
    for (const auto& a : cfg.axes) {
        t.metadata.emplace_back("axis", a.spec);
    }
    std::set<std::string> axis_names;
    for (const auto& a : cfg.axes) {
        axis_names.insert(a.name);
    }
    const Params base = points.empty() ? default_parameters(cfg.model) : points.front();
    for (const auto& [k, v] : base) {
        if (!axis_names.count(k)) {
            t.metadata.emplace_back("param", k + "=" + param_text(v));
        }
    }

    for (const auto& a : cfg.axes) {
        t.columns.push_back(a.name);
    }
    const auto& metric_cols = cfg.model == SweepModel::Scattering ? kScatteringColumns : kBogoliubovColumns;
    t.columns.insert(t.columns.end(), metric_cols.begin(), metric_cols.end());

    t.rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<double> row;
        row.reserve(t.columns.size());
        for (const auto& a : cfg.axes) {
            row.push_back(points[i].at(a.name));
        }
        row.insert(row.end(), rows[i].values.begin(), rows[i].values.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<std::pair<std::string, double>> evaluate_point(const SweepConfig& cfg) {
    SweepConfig single = cfg;
    single.axes.clear();
    validate(single);
    Params q = grid_points(single).front();
    std::vector<std::pair<std::string, double>> out;

    if (cfg.model == SweepModel::Scattering) {
        const SystemParams p = scattering_params(q);
        const double omega = get(q, "omega");
        out.emplace_back("Cg", p.cg());
        out.emplace_back("Cnu", p.cnu());
        out.emplace_back("max_growth_rate", max_growth_rate(p));
        out.emplace_back("stable", spectrally_stable(p) ? 1.0 : 0.0);
        out.emplace_back("stable_printed_bound", stability_check(p.cg(), p.cnu()) ? 1.0 : 0.0);
        out.emplace_back("stable_exact_bound",
                         stability_check_exact(p.cg(), p.cnu(), p.kappa_o / p.kappa_e) ? 1.0 : 0.0);
        if (!spectrally_stable(p)) {
            throw StabilityError("parameters are unstable (max growth rate " +
                                 format_value(max_growth_rate(p)) + ")");
        }
        const ScatteringMatrix s = scattering(p, omega);
        const QuadratureMatrix s_x = s.quadrature();
        out.emplace_back("condition_number", s.condition_number);
        out.emplace_back("near_singular", s.near_singular ? 1.0 : 0.0);
        const ChannelMetrics m = evaluate_channel(extract_channel(s_x, cfg.direction, scattering_baths(q)));
        out.emplace_back("eta", m.eta);
        out.emplace_back("n_e", m.n_e);
        out.emplace_back("sigma2", m.sigma2);
        out.emplace_back("Q_LB", m.q_lb.value());
        const bool resonant = p.delta_o == 0.0 && p.delta_e == 0.0;
        double closed = kNaN;
        if (resonant) {
            closed = omega == 0.0 ? eta_closed_form(p.cg(), p.cnu(), p.zeta_o, p.zeta_e) : eta_bandwidth(p, omega);
        } else if (omega == 0.0) {
            closed = eta_detuned(p.cg(), p.cnu(), p.chi_o(), p.chi_e(), p.zeta_o, p.zeta_e);
        }
        out.emplace_back("eta_closed", closed);
        out.emplace_back("symplectic_residual", symplectic_residual(s_x.values()));
        double squeezing = kNaN;
        try {
            squeezing = bloch_messiah(s_x).squeezing().front();
        } catch (const PreconditionError&) {
        }
        out.emplace_back("bm_max_squeezing", squeezing);
        const QuadratureMatrix block = coupling_block(s_x);
        const auto form = is_symplectic(block) ? detect_half_matched(block) : std::nullopt;
        out.emplace_back("half_matched", form ? 1.0 : 0.0);
        out.emplace_back("xi", form ? form->xi : kNaN);
        out.emplace_back("gamma", form ? form->gamma : kNaN);
        return out;
    }

    SystemParams p = bogoliubov_params(q);
    const BogoliubovFrame f = build_frame(p);
    const double chi_o = get(q, "chi_o");
    p.delta_o = std::isnan(chi_o) ? -f.omega_s : chi_o * p.kappa_o;
    const double elim = get(q, "eliminate");
    const bool eliminate = std::isnan(elim) ? cfg.eliminate_noise : elim != 0.0;
    const ChannelMetrics m = bogoliubov_channel_metrics(p, eliminate);
    const RwaReport rwa = rwa_validity(p, f);
    const RwaComparison cmp = compare_rwa(p);
    const EliminationParams e = elimination_params(f.r, p.theta);
    out.emplace_back("beta_eff", f.beta);
    out.emplace_back("beta_capped", f.beta_capped ? 1.0 : 0.0);
    out.emplace_back("r", f.r);
    out.emplace_back("g_s", f.g_s);
    out.emplace_back("omega_s", f.omega_s);
    out.emplace_back("C_s", f.c_s);
    out.emplace_back("g_ratio", std::cosh(f.r));
    out.emplace_back("n_nu", eliminate ? p.n_th : amplified_noise(f.r, p.n_th));
    out.emplace_back("eta", m.eta);
    out.emplace_back("n_e", m.n_e);
    out.emplace_back("sigma2", m.sigma2);
    out.emplace_back("Q_LB", m.q_lb.value());
    out.emplace_back("rwa_coupling", rwa.coupling_ratio);
    out.emplace_back("rwa_detuning", rwa.detuning_ratio);
    out.emplace_back("rwa_ok", rwa.ok() ? 1.0 : 0.0);
    out.emplace_back("eta_scattering_frame", cmp.eta_scattering);
    out.emplace_back("rwa_discrepancy", cmp.discrepancy);
    out.emplace_back("elimination_lambda", e.lambda);
    out.emplace_back("elimination_phi", e.phi);
    out.emplace_back("elimination_db", squeezing_db(e.lambda));
    return out;
}

}  // namespace transduction
