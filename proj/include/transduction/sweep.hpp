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

// Parameter sweeps over the transducer model and the Bogoliubov picture.
//
// Parameters are dimensionless except the rates kappa_o, kappa_e and the
// frequency omega, which share one (arbitrary) unit; presets use MHz.

#include "transduction/model.hpp"
#include "transduction/table.hpp"

#include <map>
#include <string>
#include <vector>

namespace transduction {

enum class SweepModel { Scattering, Bogoliubov };

const char* to_string(SweepModel m) noexcept;
SweepModel parse_model(const std::string& text);

struct Axis {
    std::string name;
    std::vector<double> values;
    std::string spec;  // textual form, kept for metadata

    /// name:min:max:count[:log] or name:v1,v2,...  Throws ConfigError.
    static Axis parse(const std::string& text);
    static Axis range(const std::string& name, double min, double max, int count, bool log = false);
    static Axis list(const std::string& name, std::vector<double> values);
};

struct SweepConfig {
    std::string preset;
    std::string description;
    SweepModel model = SweepModel::Scattering;
    std::vector<Axis> axes;  // first axis varies slowest
    std::map<std::string, double> fixed;
    Direction direction = Direction::OpticalToMicrowave;
    bool eliminate_noise = false;
    std::string out = "-";
    TableFormat format = TableFormat::Csv;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Parameter names a model accepts.
const std::vector<std::string>& parameter_names(SweepModel m);

/// Defaults before overrides (presets use the same device rates).
std::map<std::string, double> default_parameters(SweepModel m);

/// Applies "key=value" to `fixed`. Throws ConfigError.
void apply_setting(SweepConfig& cfg, const std::string& key_value);

/// Throws ConfigError for unknown parameters, duplicate axes or empty axes.
void validate(const SweepConfig& cfg);

/// Worker count: `requested` (or hardware concurrency), capped by
/// TRANSDUCTION_LAB_THREADS. Throws ConfigError on a malformed variable.
unsigned sweep_threads(unsigned requested);

/// One row per grid point in row-major axis order. Unstable points are kept
/// with stable = 0 and empty metrics.
ResultTable run_sweep(const SweepConfig& cfg);

/// All metrics of a single parameter set (axes ignored), as name/value pairs.
std::vector<std::pair<std::string, double>> evaluate_point(const SweepConfig& cfg);

struct PresetInfo {
    std::string name;
    std::string description;
};

std::vector<PresetInfo> list_presets();
/// Throws ConfigError for an unknown name.
SweepConfig preset_config(const std::string& name);

/// Reads "key = value" lines ('#' comments). Keys: preset, model, direction,
/// eliminate_noise, out, format, threads, grid (repeatable), set (repeatable,
/// "name=value") and set.<name>. Throws ConfigError / IoError.
SweepConfig load_config(const std::string& path);
/// Applies one config-file entry on top of `cfg`.
void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value);

}  // namespace transduction
