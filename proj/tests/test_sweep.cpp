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

#include "doctest.h"
#include "support/oracles.hpp"

#include "transduction/bogoliubov.hpp"
#include "transduction/errors.hpp"
#include "transduction/metrics.hpp"
#include "transduction/sweep.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace transduction;

namespace {

SweepConfig small_scattering() {
    SweepConfig cfg;
    cfg.axes.push_back(Axis::list("Cnu", {0.0, 0.1, 2.0}));
    cfg.axes.push_back(Axis::range("Cg", 0.01, 3.0, 7, true));
    cfg.fixed["zeta_o"] = 0.9;
    return cfg;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("axis parsing") {
    const Axis lin = Axis::parse("Cg:0:1:5");
    CHECK(lin.name == "Cg");
    CHECK(lin.values == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    CHECK(lin.spec == "Cg:0:1:5");
    const Axis lg = Axis::parse("Cg:0.001:10:5:log");
    CHECK(lg.values.front() == 0.001);
    CHECK(lg.values.back() == 10.0);
    CHECK(lg.values[2] == doctest::Approx(0.1).epsilon(1e-14));
    const Axis list = Axis::parse("beta:0,0.8,0.95");
    CHECK(list.values == std::vector<double>{0.0, 0.8, 0.95});
    CHECK_THROWS_AS(Axis::parse("Cg"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:0:1"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:0:1:1"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:0:1:x"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:0:1:4:cubic"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:0:1:4:log"), ConfigError);
    CHECK_THROWS_AS(Axis::parse("Cg:a,b"), ConfigError);
}

TEST_CASE("settings and validation") {
    SweepConfig cfg;
    apply_setting(cfg, "Cg=0.5");
    CHECK(cfg.fixed.at("Cg") == 0.5);
    apply_setting(cfg, "squeeze_coupling_only=true");
    CHECK(cfg.fixed.at("squeeze_coupling_only") == 1.0);
    CHECK_THROWS_AS(apply_setting(cfg, "Cg"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "=1"), ConfigError);
    CHECK_THROWS_AS(apply_setting(cfg, "Cg=abc"), ConfigError);
    cfg.fixed["beta"] = 0.1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.fixed.erase("beta");
    cfg.axes = {Axis::parse("Cg:0:1:3"), Axis::parse("Cg:0:2:3")};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.axes = {Axis::parse("omega_s:0:1:3")};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    CHECK(parse_model("bogoliubov") == SweepModel::Bogoliubov);
    CHECK_THROWS_AS(parse_model("quantum"), ConfigError);
}

TEST_CASE("scattering sweep rows") {
    const ResultTable t = run_sweep(small_scattering());
    REQUIRE(t.rows.size() == 21);
    CHECK(t.columns == std::vector<std::string>{"Cnu", "Cg", "stable", "eta", "eta_closed", "n_e", "sigma2", "Q_LB"});
    // First axis varies slowest.
    CHECK(t.rows[0][0] == 0.0);
    CHECK(t.rows[6][0] == 0.0);
    CHECK(t.rows[7][0] == 0.1);
    CHECK(t.rows[1][1] > t.rows[0][1]);
    for (const auto& row : t.rows) {
        const double cnu = row[0];
        const double cg = row[1];
        const bool stable = stability_check_exact(cg, cnu, 100.0 / 0.2);
        CHECK(row[2] == (stable ? 1.0 : 0.0));
        if (!stable) {
            for (std::size_t j = 3; j < row.size(); ++j) {
                CHECK(std::isnan(row[j]));
            }
            continue;
        }
        const double ref = oracle::eta_resonant(cg, cnu, 0.9, 1.0);
        CHECK(std::abs(row[3] - ref) < 1e-10 * ref);
        CHECK(std::abs(row[4] - ref) < 1e-14 * ref);
    }
    CHECK(t.meta("model") == "scattering");
    CHECK(t.meta("direction") == "o2m");
    CHECK(t.meta("axis") == "Cnu:0,0.10000000000000001,2");
}

TEST_CASE("metadata lists fixed parameters in sorted order") {
    SweepConfig cfg;
    cfg.model = SweepModel::Bogoliubov;
    cfg.axes.push_back(Axis::parse("beta:0,0.5"));
    const ResultTable t = run_sweep(cfg);
    std::vector<std::string> params;
    for (const auto& [k, v] : t.metadata) {
        if (k == "param") {
            params.push_back(v);
        }
    }
    CHECK(std::is_sorted(params.begin(), params.end()));
    CHECK(std::find(params.begin(), params.end(), "chi_o=auto") != params.end());
    CHECK(std::find(params.begin(), params.end(), "eliminate=0") != params.end());
    for (const auto& p : params) {
        CHECK(p.rfind("beta=", 0) != 0);
    }
}

TEST_CASE("sweep output does not depend on the thread count") {
    SweepConfig cfg = preset_config("fig2e");
    cfg.axes = {Axis::range("chi_o", -1.0, 1.0, 23), Axis::range("chi_e", -1.0, 1.0, 17)};
    std::string reference;
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
        cfg.threads = threads;
        const ResultTable t = run_sweep(cfg);
        const std::string csv = to_csv(t) + to_json(t);
        if (reference.empty()) {
            reference = csv;
        }
        CHECK(csv == reference);
    }
}

TEST_CASE("thread count honours the environment cap") {
    ::setenv("TRANSDUCTION_LAB_THREADS", "2", 1);
    CHECK(sweep_threads(8) == 2);
    CHECK(sweep_threads(1) == 1);
    ::setenv("TRANSDUCTION_LAB_THREADS", "zero", 1);
    CHECK_THROWS_AS(sweep_threads(4), ConfigError);
    ::setenv("TRANSDUCTION_LAB_THREADS", "0", 1);
    CHECK_THROWS_AS(sweep_threads(4), ConfigError);
    ::unsetenv("TRANSDUCTION_LAB_THREADS");
    CHECK(sweep_threads(3) == 3);
    CHECK(sweep_threads(0) >= 1);
}

TEST_CASE("Bogoliubov sweep rows") {
    SweepConfig cfg;
    cfg.model = SweepModel::Bogoliubov;
    cfg.axes = {Axis::parse("eliminate:0,1"), Axis::parse("beta:0,0.8,0.9995,1.5")};
    cfg.fixed["Cg"] = 0.3;
    const ResultTable t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 8);
    const auto col = [&](const char* n) { return t.column(n); };
    const auto& amp = t.rows[1];
    const auto& clean = t.rows[5];
    CHECK(amp[col("n_nu")] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(clean[col("n_nu")] == 0.0);
    CHECK(amp[col("eta")] == clean[col("eta")]);
    const double cs = 0.3 * std::cosh(amp[col("r")]) * std::cosh(amp[col("r")]);
    CHECK(amp[col("C_s")] == doctest::Approx(cs).epsilon(1e-14));
    CHECK(amp[col("eta")] == doctest::Approx(4.0 * cs / ((1 + cs) * (1 + cs))).epsilon(1e-14));
    CHECK(t.rows[2][col("beta_capped")] == 1.0);
    CHECK(t.rows[2][col("beta_eff")] == kDefaultBetaCap);
    CHECK(t.rows[3][col("stable")] == 0.0);
    CHECK(std::isnan(t.rows[3][col("eta")]));
    CHECK(t.rows[0][col("rwa_ok")] == 1.0);
}

TEST_CASE("presets") {
    const auto presets = list_presets();
    CHECK(presets.size() == 16);
    for (const auto& p : presets) {
        CAPTURE(p.name);
        const SweepConfig cfg = preset_config(p.name);
        CHECK_NOTHROW(validate(cfg));
        CHECK(cfg.preset == p.name);
        CHECK_FALSE(cfg.axes.empty());
        CHECK(cfg.description == p.description);
    }
    CHECK_THROWS_AS(preset_config("fig9z"), ConfigError);
    CHECK(preset_config("fig2b").axes.size() == 2);
    CHECK(preset_config("fig2b").axes[0].values.size() == 200);
}

TEST_CASE("config files") {
    const auto path = temp_file("transduction_cfg_ok.conf",
                                "# comment\n"
                                "preset = fig2a\n"
                                "direction = m2o\n"
                                "set = zeta_o=0.9\n"
                                "set.zeta_e = 0.95\n"
                                "grid = Cg:0.1:1:4\n"
                                "format = json\n"
                                "threads = 2\n");
    const SweepConfig cfg = load_config(path.string());
    CHECK(cfg.preset == "fig2a");
    CHECK(cfg.direction == Direction::MicrowaveToOptical);
    CHECK(cfg.fixed.at("zeta_o") == 0.9);
    CHECK(cfg.fixed.at("zeta_e") == 0.95);
    CHECK(cfg.format == TableFormat::Json);
    CHECK(cfg.threads == 2);
    REQUIRE(cfg.axes.size() == 2);
    CHECK(cfg.axes[1].name == "Cg");
    CHECK(cfg.axes[1].values.size() == 4);

    const auto bad_key = temp_file("transduction_cfg_badkey.conf", "colour = blue\n");
    CHECK_THROWS_AS(load_config(bad_key.string()), ConfigError);
    const auto bad_line = temp_file("transduction_cfg_badline.conf", "just words\n");
    CHECK_THROWS_AS(load_config(bad_line.string()), ConfigError);
    const auto bad_param = temp_file("transduction_cfg_badparam.conf", "set.omega_x = 1\n");
    CHECK_THROWS_AS(validate(load_config(bad_param.string())), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/transduction.conf"), IoError);
    for (const auto& p : {path, bad_key, bad_line, bad_param}) {
        std::filesystem::remove(p);
    }
}

TEST_CASE("single point evaluation") {
    SweepConfig cfg;
    cfg.fixed = {{"Cg", 0.25}, {"Cnu", 0.140625}};
    const auto values = evaluate_point(cfg);
    auto get = [&](const std::string& name) {
        for (const auto& [k, v] : values) {
            if (k == name) {
                return v;
            }
        }
        FAIL("missing " << name);
        return 0.0;
    };
    CHECK(get("eta") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(get("half_matched") == 1.0);
    CHECK(get("xi") == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(get("bm_max_squeezing") == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(get("symplectic_residual") < 1e-10);

    cfg.fixed["Cnu"] = 0.5;
    CHECK_THROWS_AS(evaluate_point(cfg), StabilityError);

    SweepConfig b;
    b.model = SweepModel::Bogoliubov;
    b.fixed = {{"beta", 0.8}};
    const auto bv = evaluate_point(b);
    for (const auto& [k, v] : bv) {
        if (k == "n_nu") {
            CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        }
        if (k == "rwa_discrepancy") {
            CHECK(std::abs(v) < 1e-12);
        }
    }
}
