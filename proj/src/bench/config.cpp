// Copyright 2026 The nvconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nvconv/bench/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace nvconv::bench {

using nlohmann::json;

namespace {

std::vector<double> axis(const Range &r, std::size_t steps) {
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        out[i] = i + 1 == steps ? r.max : r.min + t * (r.max - r.min);
    }
    return out;
}

void check_keys(const json &obj, const std::string &where,
                std::initializer_list<const char *> allowed) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto &[key, _] : obj.items()) {
        if (keys.count(key) == 0) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
}

template <typename T>
void read(const json &obj, const char *key, T &out, const std::string &where) {
    if (!obj.contains(key)) {
        return;
    }
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(where + "." + key + ": " + e.what());
    }
}

std::size_t read_count(const json &obj, const char *key, std::size_t fallback,
                       const std::string &where) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ConfigError(where + "." + key + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

Range read_range(const json &obj, const std::string &where) {
    check_keys(obj, where, {"min", "max"});
    Range r;
    read(obj, "min", r.min, where);
    read(obj, "max", r.max, where);
    return r;
}

} // namespace

std::vector<double> SweepGrid::kappa_axis() const {
    return axis(g_over_kappa, steps);
}

std::vector<double> SweepGrid::gamma_axis() const {
    return axis(g_over_gamma, steps);
}

void SweepGrid::validate() const {
    for (const Range *r : {&g_over_kappa, &g_over_gamma}) {
        if (!(r->min > 0.0) || !(r->max >= r->min) || !std::isfinite(r->max)) {
            throw ConfigError("sweep ranges must be positive with min <= max");
        }
    }
    if (steps < 2) {
        throw ConfigError("sweep needs at least 2 steps per axis");
    }
}

RunConfig default_config() {
    RunConfig c;
    c.protocol.params.g = 0.3;
    c.protocol.params.kappa = 26.0;
    c.protocol.params.gamma = 0.0004;
    return c;
}

std::string to_string(GateMode mode) {
    return mode == GateMode::Ideal ? "ideal" : "realistic";
}

std::string to_string(HomodyneMode mode) {
    return mode == HomodyneMode::Ideal ? "ideal" : "gaussian";
}

std::string to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

GateMode parse_gate_mode(const std::string &text) {
    if (text == "ideal") {
        return GateMode::Ideal;
    }
    if (text == "realistic") {
        return GateMode::Realistic;
    }
    throw ConfigError("gate_mode must be 'ideal' or 'realistic', got '" + text + "'");
}

HomodyneMode parse_homodyne_mode(const std::string &text) {
    if (text == "ideal") {
        return HomodyneMode::Ideal;
    }
    if (text == "gaussian") {
        return HomodyneMode::Gaussian;
    }
    throw ConfigError("homodyne_mode must be 'ideal' or 'gaussian', got '" +
                      text + "'");
}

OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("format must be 'csv' or 'json', got '" + text + "'");
}

json to_json(const RunConfig &c) {
    const ProtocolSpec &p = c.protocol;
    json j;
    j["protocol"] = {
        {"n_photons", p.n_photons},
        {"max_iterations", p.max_iterations},
        {"gate_mode", to_string(p.gate_mode)},
        {"homodyne_mode", to_string(p.homodyne_mode)},
        {"theta", p.theta},
        {"alpha", p.alpha},
        {"standard_w_form", p.standard_w_form},
        {"cavity",
         {{"g", p.params.g},
          {"kappa", p.params.kappa},
          {"gamma", p.params.gamma},
          {"omega_c", p.params.omega_c},
          {"omega_0", p.params.omega_0},
          {"omega_p", p.params.omega_p}}}};
    if (c.sweep) {
        j["sweep"] = {
            {"g_over_kappa",
             {{"min", c.sweep->g_over_kappa.min}, {"max", c.sweep->g_over_kappa.max}}},
            {"g_over_gamma",
             {{"min", c.sweep->g_over_gamma.min}, {"max", c.sweep->g_over_gamma.max}}},
            {"steps", c.sweep->steps}};
    }
    j["trials"] = c.trials;
    j["seed"] = c.seed ? json(*c.seed) : json(nullptr);
    j["jobs"] = c.jobs;
    j["rounds"] = c.rounds;
    j["output"] = {{"path", c.output_path},
                   {"format", c.format ? json(to_string(*c.format)) : json(nullptr)}};
    return j;
}

RunConfig config_from_json(const json &j) {
    RunConfig c = default_config();
    check_keys(j, "config",
               {"protocol", "sweep", "trials", "seed", "jobs", "rounds", "output",
                "$schema"});
    if (j.contains("protocol")) {
        const json &pj = j.at("protocol");
        const std::string where = "protocol";
        check_keys(pj, where,
                   {"n_photons", "max_iterations", "gate_mode", "homodyne_mode",
                    "theta", "alpha", "standard_w_form", "cavity"});
        ProtocolSpec &p = c.protocol;
        p.n_photons = read_count(pj, "n_photons", p.n_photons, where);
        p.max_iterations = read_count(pj, "max_iterations", p.max_iterations, where);
        std::string mode = to_string(p.gate_mode);
        read(pj, "gate_mode", mode, where);
        p.gate_mode = parse_gate_mode(mode);
        mode = to_string(p.homodyne_mode);
        read(pj, "homodyne_mode", mode, where);
        p.homodyne_mode = parse_homodyne_mode(mode);
        read(pj, "theta", p.theta, where);
        read(pj, "alpha", p.alpha, where);
        read(pj, "standard_w_form", p.standard_w_form, where);
        if (pj.contains("cavity")) {
            const json &cj = pj.at("cavity");
            const std::string cw = "protocol.cavity";
            check_keys(cj, cw, {"g", "kappa", "gamma", "omega_c", "omega_0", "omega_p"});
            read(cj, "g", p.params.g, cw);
            read(cj, "kappa", p.params.kappa, cw);
            read(cj, "gamma", p.params.gamma, cw);
            read(cj, "omega_c", p.params.omega_c, cw);
            read(cj, "omega_0", p.params.omega_0, cw);
            read(cj, "omega_p", p.params.omega_p, cw);
        }
    }
    if (j.contains("sweep") && !j.at("sweep").is_null()) {
        const json &sj = j.at("sweep");
        check_keys(sj, "sweep", {"g_over_kappa", "g_over_gamma", "steps"});
        if (!sj.contains("g_over_kappa") || !sj.contains("g_over_gamma")) {
            throw ConfigError("sweep: both g_over_kappa and g_over_gamma are required");
        }
        SweepGrid grid;
        grid.g_over_kappa = read_range(sj.at("g_over_kappa"), "sweep.g_over_kappa");
        grid.g_over_gamma = read_range(sj.at("g_over_gamma"), "sweep.g_over_gamma");
        grid.steps = read_count(sj, "steps", grid.steps, "sweep");
        c.sweep = grid;
    }
    c.trials = read_count(j, "trials", c.trials, "config");
    if (j.contains("seed") && !j.at("seed").is_null()) {
        const json &s = j.at("seed");
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
            throw ConfigError("config.seed: expected a non-negative 64-bit integer");
        }
        c.seed = s.get<std::uint64_t>();
    }
    c.jobs = read_count(j, "jobs", c.jobs, "config");
    c.rounds = read_count(j, "rounds", c.rounds, "config");
    if (j.contains("output")) {
        const json &oj = j.at("output");
        check_keys(oj, "output", {"path", "format"});
        read(oj, "path", c.output_path, "output");
        if (oj.contains("format") && !oj.at("format").is_null()) {
            std::string f;
            read(oj, "format", f, "output");
            c.format = parse_format(f);
        }
    }
    return c;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file '" + path.string() + "': " + e.what());
    }
    return config_from_json(j);
}

} // namespace nvconv::bench
