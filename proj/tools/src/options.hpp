// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <vector>

#include <CLI11.hpp>

#include "ampcap/cli/run_config.hpp"

namespace ampcap::cli {

/// Registers options and remembers how to serialize them into a RunConfig.
class Recorder {
public:
    explicit Recorder(CLI::App* app) : app_(app) {}

    template <class T>
    CLI::Option* option(const std::string& name, T& var, const std::string& help) {
        auto* opt = app_->add_option("--" + name, var, help)
                        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        if constexpr (!is_optional<T>::value) {
            opt->capture_default_str();
        }
        fields_.push_back({name, [&var]() { return render(var); }});
        return opt;
    }

    CLI::Option* flag(const std::string& name, bool& var, const std::string& help) {
        auto* opt = app_->add_flag("--" + name, var, help)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
        fields_.push_back({name, [&var]() { return std::optional<std::string>(var ? "true" : "false"); }});
        return opt;
    }

    /// Registered like an option but not part of the run record.
    template <class T>
    CLI::Option* unrecorded(const std::string& name, T& var, const std::string& help) {
        return app_->add_option("--" + name, var, help)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }

    CLI::Option* find(const std::string& name) const { return app_->get_option("--" + name); }

    RunConfig record() const {
        RunConfig cfg;
        for (const auto& f : fields_) {
            if (auto v = f.render()) {
                cfg.set(f.name, *v);
            }
        }
        return cfg;
    }

private:
    template <class T>
    struct is_optional : std::false_type {};
    template <class T>
    struct is_optional<std::optional<T>> : std::true_type {};

    template <class T>
    static std::optional<std::string> render(const T& v) {
        if constexpr (is_optional<T>::value) {
            return v ? render(*v) : std::nullopt;
        } else if constexpr (std::is_floating_point_v<T>) {
            return format_setting(v);
        } else if constexpr (std::is_integral_v<T>) {
            return std::to_string(v);
        } else {
            return std::string(v);
        }
    }

    struct Field {
        std::string name;
        std::function<std::optional<std::string>()> render;
    };
    CLI::App* app_;
    std::vector<Field> fields_;
};

/// Flags shared by every subcommand. Defaults are set per subcommand.
struct CommonOptions {
    std::uint64_t seed = 20260101;
    std::string out = "-";
    std::string format = "csv";
    double tol = 1e-8;
    std::int64_t samples = 0;
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    std::optional<int> grid_points;
    std::optional<std::string> grid_scale;
    unsigned threads = 0;
    std::string config;
};

void add_common_options(Recorder& rec, CommonOptions& c);

struct Grid {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    std::string scale = "linear";
};

/// Fills unset grid options from `defaults`, validates, and writes the resolved
/// values back so they are recorded.
Grid resolve_grid(CommonOptions& c, const Grid& defaults);

std::vector<double> grid_values(const Grid& g);

/// Parses "a,b,c" into numbers; throws std::invalid_argument on bad input.
std::vector<double> parse_list(const std::string& text, const std::string& name);
std::vector<int> parse_int_list(const std::string& text, const std::string& name);

/// Writes `text` to the --out target.
void emit(const CommonOptions& c, const std::string& text, std::ostream& out);

/// A usage-level problem with the request: exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace ampcap::cli
