// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "options.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ampcap::cli {

void add_common_options(Recorder& rec, CommonOptions& c) {
    rec.option("seed", c.seed, "Master seed for all random streams");
    rec.unrecorded("out", c.out, "Output file ('-' for standard output)")->capture_default_str();
    rec.option("format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    rec.option("tol", c.tol, "Numerical tolerance");
    rec.option("samples", c.samples, "Sample count");
    rec.option("grid-min", c.grid_min, "Grid lower end");
    rec.option("grid-max", c.grid_max, "Grid upper end");
    rec.option("grid-points", c.grid_points, "Number of grid points");
    rec.option("grid-scale", c.grid_scale, "Grid spacing")->check(CLI::IsMember({"log", "linear"}));
    rec.unrecorded("threads", c.threads, "Worker threads (0: automatic); does not affect results");
    rec.unrecorded("config", c.config, "key=value config file, or a previous output to replay");
}

Grid resolve_grid(CommonOptions& c, const Grid& defaults) {
    Grid g;
    g.min = c.grid_min.value_or(defaults.min);
    g.max = c.grid_max.value_or(defaults.max);
    g.points = c.grid_points.value_or(defaults.points);
    g.scale = c.grid_scale.value_or(defaults.scale);
    c.grid_min = g.min;
    c.grid_max = g.max;
    c.grid_points = g.points;
    c.grid_scale = g.scale;
    if (g.points < 1) {
        throw UsageError("grid is empty: grid-points must be >= 1");
    }
    if (!std::isfinite(g.min) || !std::isfinite(g.max) || g.max < g.min) {
        throw UsageError("grid needs finite grid-min <= grid-max");
    }
    if (g.scale == "log" && !(g.min > 0.0)) {
        throw UsageError("log grid needs grid-min > 0");
    }
    return g;
}

std::vector<double> grid_values(const Grid& g) {
    std::vector<double> v(static_cast<std::size_t>(g.points));
    if (g.points == 1) {
        v[0] = g.min;
        return v;
    }
    const double last = g.points - 1;
    if (g.scale == "log") {
        const double a = std::log10(g.min);
        const double b = std::log10(g.max);
        for (int i = 0; i < g.points; ++i) {
            v[i] = std::pow(10.0, a + (b - a) * i / last);
        }
        v.front() = g.min;
        v.back() = g.max;
    } else {
        for (int i = 0; i < g.points; ++i) {
            v[i] = g.min + (g.max - g.min) * i / last;
        }
        v.back() = g.max;
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& name) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw UsageError(name + ": '" + item + "' is not a number");
        }
    }
    if (out.empty()) {
        throw UsageError(name + ": empty list");
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& name) {
    std::vector<int> out;
    for (double v : parse_list(text, name)) {
        if (v != std::floor(v) || v < 1 || v > 1e9) {
            throw UsageError(name + ": entries must be positive integers");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

void emit(const CommonOptions& c, const std::string& text, std::ostream& out) {
    if (c.out == "-") {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot open output file '" + c.out + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing '" + c.out + "'");
    }
}

}  // namespace ampcap::cli
