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
#include "transduction/errors.hpp"
#include "transduction/sweep.hpp"
#include "transduction/version.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>

namespace {

using namespace transduction;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

struct CommonOptions {
    std::string config;
    std::string preset;
    std::string model;
    std::vector<std::string> sets;
    std::vector<std::string> grids;
    std::string out = "-";
    std::string format;
    std::string direction;
    bool eliminate = false;
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool sweep) {
    cmd->add_option("--config", o.config, "Config file (key = value lines)");
    cmd->add_option("--preset", o.preset, "Figure preset (see `presets`)");
    cmd->add_option("--model", o.model, "scattering or bogoliubov");
    cmd->add_option("--set", o.sets, "Fix a parameter, name=value (repeatable)")->allow_extra_args(false);
    cmd->add_option("--direction", o.direction, "o2m or m2o");
    cmd->add_flag("--eliminate-noise", o.eliminate, "Assume the squeezing-induced noise is cancelled");
    cmd->add_option("--format", o.format, "csv or json");
    if (sweep) {
        cmd->add_option("--grid", o.grids, "Axis name:min:max:count[:log] or name:v1,v2,... (repeatable)")
            ->allow_extra_args(false);
        cmd->add_option("--out", o.out, "Output path, '-' for stdout");
        cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    }
}

SweepConfig build_config(const CommonOptions& o) {
    SweepConfig cfg = o.config.empty() ? SweepConfig{} : load_config(o.config);
    if (!o.preset.empty()) {
        apply_config_entry(cfg, "preset", o.preset);
    }
    if (!o.model.empty()) {
        cfg.model = parse_model(o.model);
    }
    for (const auto& s : o.sets) {
        apply_setting(cfg, s);
    }
    for (const auto& g : o.grids) {
        apply_config_entry(cfg, "grid", g);
    }
    if (o.out != "-") {
        cfg.out = o.out;
    }
    if (!o.format.empty()) {
        cfg.format = parse_format(o.format);
    }
    if (!o.direction.empty()) {
        cfg.direction = parse_direction(o.direction);
    }
    if (o.threads) {
        cfg.threads = o.threads;
    }
    if (o.eliminate) {
        if (cfg.model != SweepModel::Bogoliubov) {
            throw ConfigError("--eliminate-noise applies to the bogoliubov model");
        }
        cfg.eliminate_noise = true;
    }
    validate(cfg);
    return cfg;
}

void warn_capped(const ResultTable& t) {
    if (std::find(t.columns.begin(), t.columns.end(), "beta_capped") == t.columns.end()) {
        return;
    }
    std::size_t n = 0;
    for (double v : t.column_values("beta_capped")) {
        n += v == 1.0 ? 1 : 0;
    }
    if (n) {
        std::cerr << "warning: beta capped at 0.999 in " << n << " row(s)\n";
    }
}

int run_sweep_command(const CommonOptions& o) {
    const SweepConfig cfg = build_config(o);
    if (cfg.axes.empty()) {
        throw ConfigError("sweep needs --preset or at least one --grid");
    }
    const ResultTable t = run_sweep(cfg);
    warn_capped(t);
    write_table(t, cfg.out, cfg.format);
    return kExitOk;
}

int run_point_command(const CommonOptions& o) {
    const SweepConfig cfg = build_config(o);
    const auto values = evaluate_point(cfg);
    if (cfg.format == TableFormat::Json) {
        ResultTable t;
        t.metadata.emplace_back("model", to_string(cfg.model));
        for (const auto& [k, v] : values) {
            t.columns.push_back(k);
        }
        t.rows.emplace_back();
        for (const auto& [k, v] : values) {
            t.rows.back().push_back(v);
        }
        write_table(t, "-", TableFormat::Json);
        return kExitOk;
    }
    for (const auto& [k, v] : values) {
        const std::string text = format_value(v);
        std::cout << k << " = " << (text.empty() ? "nan" : text) << "\n";
    }
    return kExitOk;
}

int run_check_command() {
    bool all = true;
    for (const auto& r : run_invariant_checks()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian-channel model of a parametrically driven electro-optic transducer"};
    app.set_version_flag("--version", std::string("transduction_lab ") + kVersion);
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    CommonOptions point_opts;
    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid and write a table");
    add_common(sweep, sweep_opts, true);
    auto* presets = app.add_subcommand("presets", "List figure presets");
    auto* point = app.add_subcommand("point", "Print all metrics for one parameter set");
    add_common(point, point_opts, false);
    auto* check = app.add_subcommand("check", "Run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*sweep) {
            return run_sweep_command(sweep_opts);
        }
        if (*presets) {
            for (const auto& p : list_presets()) {
                std::printf("%-8s %s\n", p.name.c_str(), p.description.c_str());
            }
            return kExitOk;
        }
        if (*point) {
            return run_point_command(point_opts);
        }
        if (*check) {
            return run_check_command();
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
