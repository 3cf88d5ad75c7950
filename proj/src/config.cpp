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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace transduction {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t == "true") {
        return 1.0;
    }
    if (t == "false") {
        return 0.0;
    }
    if (t == "auto") {
        return std::numeric_limits<double>::quiet_NaN();
    }
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        throw ConfigError("invalid number '" + text + "' for " + what);
    }
    return v;
}

bool parse_flag(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    if (t == "true" || t == "1" || t == "yes") {
        return true;
    }
    if (t == "false" || t == "0" || t == "no") {
        return false;
    }
    throw ConfigError("invalid boolean '" + text + "' for " + what);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void merge_axis(SweepConfig& cfg, Axis axis) {
    for (auto& a : cfg.axes) {
        if (a.name == axis.name) {
            a = std::move(axis);
            return;
        }
    }
    cfg.axes.push_back(std::move(axis));
}

}  // namespace

Axis Axis::range(const std::string& name, double min, double max, int count, bool log) {
    if (count < 2) {
        throw ConfigError("axis '" + name + "' needs a count of at least 2");
    }
    if (!(std::isfinite(min) && std::isfinite(max))) {
        throw ConfigError("axis '" + name + "' bounds must be finite");
    }
    if (log && !(min > 0.0 && max > 0.0)) {
        throw ConfigError("log axis '" + name + "' needs positive bounds");
    }
    Axis a;
    a.name = name;
    a.values.resize(static_cast<std::size_t>(count));
    const double lo = log ? std::log(min) : min;
    const double hi = log ? std::log(max) : max;
    for (int i = 0; i < count; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        a.values[static_cast<std::size_t>(i)] = log ? std::exp(t) : t;
    }
    a.values.front() = min;
    a.values.back() = max;
    a.spec = name + ":" + format_value(min) + ":" + format_value(max) + ":" + std::to_string(count) + (log ? ":log" : "");
    return a;
}

Axis Axis::list(const std::string& name, std::vector<double> values) {
    if (values.empty()) {
        throw ConfigError("axis '" + name + "' has no values");
    }
    Axis a;
    a.name = name;
    a.spec = name + ":";
    for (std::size_t i = 0; i < values.size(); ++i) {
        a.spec += (i ? "," : "") + format_value(values[i]);
    }
    a.values = std::move(values);
    return a;
}

Axis Axis::parse(const std::string& text) {
    const auto parts = split(text, ':');
    const std::string name = trim(parts[0]);
    if (parts.size() < 2 || name.empty()) {
        throw ConfigError("malformed axis '" + text + "' (expected name:min:max:count[:log] or name:v1,v2,...)");
    }
    if (parts.size() == 2) {
        std::vector<double> values;
        for (const auto& v : split(parts[1], ',')) {
            values.push_back(parse_number(v, "axis '" + name + "'"));
        }
        return list(name, std::move(values));
    }
    if (parts.size() != 4 && parts.size() != 5) {
        throw ConfigError("malformed axis '" + text + "' (expected name:min:max:count[:log])");
    }
    bool log = false;
    if (parts.size() == 5) {
        if (trim(parts[4]) != "log" && trim(parts[4]) != "lin") {
            throw ConfigError("axis scale must be 'log' or 'lin', got '" + parts[4] + "'");
        }
        log = trim(parts[4]) == "log";
    }
    const double count = parse_number(parts[3], "axis '" + name + "' count");
    if (count != std::floor(count) || count < 2 || count > 1e7) {
        throw ConfigError("axis '" + name + "' count must be an integer >= 2");
    }
    return range(name, parse_number(parts[1], "axis '" + name + "' min"),
                 parse_number(parts[2], "axis '" + name + "' max"), static_cast<int>(count), log);
}

void apply_setting(SweepConfig& cfg, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos) {
        throw ConfigError("expected key=value, got '" + key_value + "'");
    }
    const std::string key = trim(key_value.substr(0, eq));
    if (key.empty()) {
        throw ConfigError("empty parameter name in '" + key_value + "'");
    }
    cfg.fixed[key] = parse_number(key_value.substr(eq + 1), "parameter '" + key + "'");
}

unsigned sweep_threads(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRANSDUCTION_LAB_THREADS"); env && *env) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (*end != '\0' || cap < 1) {
            throw ConfigError(std::string("TRANSDUCTION_LAB_THREADS must be a positive integer, got '") + env + "'");
        }
        n = std::min<unsigned>(n, static_cast<unsigned>(std::min<long>(cap, 4096)));
    }
    return n;
}

void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "preset") {
        SweepConfig p = preset_config(trim(value));
        p.out = cfg.out;
        p.format = cfg.format;
        p.threads = cfg.threads;
        p.direction = cfg.direction;
        for (const auto& [k, v] : cfg.fixed) {
            p.fixed[k] = v;
        }
        for (auto& a : cfg.axes) {
            merge_axis(p, std::move(a));
        }
        p.eliminate_noise = p.eliminate_noise || cfg.eliminate_noise;
        cfg = std::move(p);
    } else if (key == "model") {
        cfg.model = parse_model(trim(value));
    } else if (key == "direction") {
        cfg.direction = parse_direction(trim(value));
    } else if (key == "eliminate_noise") {
        cfg.eliminate_noise = parse_flag(value, key);
    } else if (key == "out") {
        cfg.out = trim(value);
    } else if (key == "format") {
        cfg.format = parse_format(trim(value));
    } else if (key == "threads") {
        const double t = parse_number(value, key);
        if (t < 0 || t != std::floor(t)) {
            throw ConfigError("threads must be a nonnegative integer");
        }
        cfg.threads = static_cast<unsigned>(t);
    } else if (key == "grid") {
        merge_axis(cfg, Axis::parse(trim(value)));
    } else if (key == "set") {
        apply_setting(cfg, value);
    } else if (key.rfind("set.", 0) == 0) {
        apply_setting(cfg, key.substr(4) + "=" + value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    SweepConfig cfg;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        try {
            apply_config_entry(cfg, trim(t.substr(0, eq)), t.substr(eq + 1));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(number) + ": " + e.what());
        }
    }
    return cfg;
}

}  // namespace transduction
