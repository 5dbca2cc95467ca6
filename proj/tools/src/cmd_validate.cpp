// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>

#include "ampcap/capacity.hpp"
#include "ampcap/cli/table.hpp"
#include "ampcap/medium.hpp"
#include "ampcap/oracle.hpp"
#include "ampcap/specfun.hpp"
#include "commands.hpp"

namespace ampcap::cli {
namespace {

/// Below this many samples Monte Carlo bands are widened and flagged.
constexpr std::int64_t kLowPowerSamples = 10000;

class ValidateCommand final : public Command {
public:
    explicit ValidateCommand(CLI::App& parent)
        : app_(parent.add_subcommand("validate", "Closed forms against the quadrature and Monte Carlo oracles")),
          rec_(app_) {
        common_.samples = 200000;
        add_common_options(rec_, common_);
        rec_.option("mc-sigmas", mc_sigmas_, "Monte Carlo band in standard errors");
        // Test-only sensitivity switch: scales every closed form by 1.001.
        rec_.flag("perturb", perturb_, "Scale closed forms by 1.001 (self-test of the checks)")->group("");
    }

    std::string name() const override { return "validate"; }

    int execute(std::ostream& out, std::ostream& err) override {
        if (common_.samples < 2) {
            throw UsageError("validate: samples must be >= 2");
        }
        if (!(common_.tol > 0.0)) {
            throw UsageError("validate: tol must be > 0");
        }
        if (!(mc_sigmas_ > 0.0)) {
            throw UsageError("validate: mc-sigmas must be > 0");
        }
        scale_ = perturb_ ? 1.001 : 1.0;
        low_power_ = common_.samples < kLowPowerSamples;
        band_ = low_power_ ? 1.5 * mc_sigmas_ : mc_sigmas_;
        const auto grid = grid_values(resolve_grid(common_, {1e-6, 1e6, 200, "log"}));

        table_.columns = {"check", "parameters", "closed_form", "oracle", "abs_diff", "tolerance", "band", "status"};
        heterodyne_vs_quadrature(grid);
        holevo_vs_quadrature();
        noamp_vs_quadrature();
        monte_carlo();
        mutual_information();

        std::ostringstream os;
        const auto cfg = rec_.record();
        if (common_.format == "json") {
            std::ostringstream extra;
            extra << "{\"checks\": " << table_.rows.size() << ", \"failed\": " << failed_
                  << ", \"low_power\": " << (low_power_ ? "true" : "false") << "}";
            write_json(os, name(), cfg, table_, extra.str());
        } else {
            write_csv(os, name(), cfg, table_);
        }
        emit(common_, os.str(), out);
        err << "validate: " << table_.rows.size() - failed_ << "/" << table_.rows.size() << " checks passed\n";
        return failed_ == 0 ? kExitOk : kExitFailure;
    }

private:
    void add(const std::string& check, const std::string& params, double closed, double oracle, double tolerance,
             const std::string& band) {
        const double diff = std::abs(closed - oracle);
        const bool ok = diff <= tolerance;
        failed_ += ok ? 0 : 1;
        table_.rows.push_back({check, params, closed, oracle, diff, tolerance, band, std::string(ok ? "pass" : "FAIL")});
    }

    static std::string params(std::initializer_list<std::pair<const char*, double>> kv) {
        std::string s;
        for (const auto& [k, v] : kv) {
            s += (s.empty() ? "" : ";") + std::string(k) + "=" + format_number(v);
        }
        return s;
    }

    void heterodyne_vs_quadrature(const std::vector<double>& grid) {
        for (double r : grid) {
            const double closed = scale_ * c_heterodyne_avg(r).bits;
            const double quad =
                oracle::quad_average_capacity(oracle::CapacityKind::heterodyne, r, 1.0, 1.0, {1e-13, 1e-13, 20000})
                    .bits;
            add("heterodyne_vs_quadrature", params({{"r_eff", r}}), closed, quad,
                std::max(common_.tol * std::abs(closed), 1e-10), "relative");
        }
    }

    void holevo_vs_quadrature() {
        for (double sigma : {1.01, 1.1, 2.0, 10.0, 100.0}) {
            for (double mean : {0.01, 1.0, 100.0}) {
                const double closed = scale_ * c_holevo_avg(mean, sigma, 1.0).bits;
                const double quad = oracle::quad_average_capacity(oracle::CapacityKind::holevo, mean, sigma, 1.0,
                                                                  {1e-14, 1e-13, 20000})
                                        .bits;
                add("holevo_vs_quadrature", params({{"sigma_bar", sigma}, {"tau_bar_P", mean}}), closed, quad,
                    common_.tol * std::abs(closed), "relative");
            }
        }
    }

    void noamp_vs_quadrature() {
        for (double a : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
            const double closed =
                scale_ * a / specfun::ln2 * (specfun::exp_gamma0(1.0 / a) - std::log(a) + specfun::euler_gamma);
            const double quad = c_holevo_noamp(a, 1.0, {1e-14, 1e-13, 20000}).bits;
            add("holevo_noamp_vs_quadrature", params({{"tau_bar_P", a}}), closed, quad, common_.tol * std::abs(closed),
                "relative");
        }
    }

    std::string mc_band() const {
        return format_setting(band_) + "_std_err" + (low_power_ ? ";low_power" : "");
    }

    void monte_carlo() {
        const auto n = static_cast<std::size_t>(common_.samples);
        std::uint64_t stream = 100;
        for (double x : {0.5, 2.0, 3.0}) {
            for (double m : {0.05, 0.14}) {
                const MediumParams p{10, x, m, 10.0};
                const auto het = oracle::mc_average_capacity(oracle::CapacityKind::heterodyne, p, n,
                                                             {common_.seed, stream++});
                add("heterodyne_vs_monte_carlo", params({{"length_ratio", x}, {"mfp_ratio", m}, {"power_per_mode", 1.0}}),
                    scale_ * c_heterodyne_avg(r_eff(p)).bits, het.mean, band_ * het.std_error, mc_band());
                const auto hol =
                    oracle::mc_average_capacity(oracle::CapacityKind::holevo, p, n, {common_.seed, stream++});
                add("holevo_vs_monte_carlo", params({{"length_ratio", x}, {"mfp_ratio", m}, {"power_per_mode", 1.0}}),
                    scale_ * c_holevo_avg(p).bits, hol.mean, band_ * hol.std_error, mc_band());
            }
        }
    }

    void mutual_information() {
        const auto n = static_cast<std::size_t>(common_.samples);
        std::uint64_t stream = 200;
        for (double r : {0.1, 1.0, 3.0, 10.0}) {
            const auto mi = oracle::mutual_info_gaussian(r, n, {common_.seed, stream++});
            add("gaussian_mutual_information", params({{"r", r}}), scale_ * c_heterodyne_instance(r).bits, mi.mean,
                band_ * mi.std_error, mc_band());
        }
    }

    CLI::App* app_;
    Recorder rec_;
    double mc_sigmas_ = 4.0;
    bool perturb_ = false;
    double scale_ = 1.0;
    bool low_power_ = false;
    double band_ = 4.0;
    Table table_;
    std::size_t failed_ = 0;
};

}  // namespace

std::unique_ptr<Command> make_validate(CLI::App& app) { return std::make_unique<ValidateCommand>(app); }

}  // namespace ampcap::cli
