// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <sstream>

#include "ampcap/capacity.hpp"
#include "ampcap/cli/table.hpp"
#include "ampcap/medium.hpp"
#include "ampcap/parallel.hpp"
#include "ampcap/phase.hpp"
#include "commands.hpp"

namespace ampcap::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

class CapacityCommand final : public Command {
public:
    explicit CapacityCommand(CLI::App& parent) : app_(parent.add_subcommand("capacity", "Capacity sweeps and point evaluations")), rec_(app_) {
        common_.tol = 1e-10;
        add_common_options(rec_, common_);
        rec_.option("mode", mode_, "figure2: C and C0 vs R_eff; figure3: capacities vs L/l_a; point: one parameter set")
            ->check(CLI::IsMember({"figure2", "figure3", "point"}));
        rec_.option("n-modes", n_modes_, "Number of propagating modes N");
        rec_.option("power-per-mode", power_per_mode_, "P / (N P0)");
        rec_.option("mfp-ratios", mfp_ratios_, "figure3: comma-separated l/L values");
        rec_.option("length-ratio", length_ratio_, "point: L / l_a");
        rec_.option("mfp-ratio", mfp_ratio_, "point: l / L");
        rec_.option("length", length_, "point: medium length L (raw units)");
        rec_.option("mfp", mfp_, "point: transport mean free path l (raw units)");
        rec_.option("amp-length", amp_length_, "point: amplification length l_a (raw units; omit for no gain)");
        rec_.option("power", power_, "point: total power P / P0 (overrides power-per-mode)");
    }

    std::string name() const override { return "capacity"; }

    int execute(std::ostream& out, std::ostream&) override {
        Table table;
        if (mode_ == "figure2") {
            table = figure2();
        } else if (mode_ == "figure3") {
            table = figure3();
        } else {
            table = point();
        }
        std::ostringstream os;
        const auto cfg = rec_.record();
        if (common_.format == "json") {
            write_json(os, name(), cfg, table);
        } else {
            write_csv(os, name(), cfg, table);
        }
        emit(common_, os.str(), out);
        return kExitOk;
    }

private:
    Table figure2() {
        const auto grid = grid_values(resolve_grid(common_, {1e-6, 1e6, 200, "log"}));
        Table t;
        t.columns = {"r_eff", "C", "C0"};
        t.rows.resize(grid.size());
        for (double r : grid) {
            if (!(r >= 0.0)) {
                throw UsageError("figure2: r_eff grid must be >= 0");
            }
        }
        parallel_for(grid.size(), [&](std::size_t i) {
            const double r = grid[i];
            t.rows[i] = {r, c_heterodyne_avg(r).bits, c0_reference(r).bits};
        });
        return t;
    }

    Table figure3() {
        const auto grid = grid_values(resolve_grid(common_, {0.0, kPi - 1e-5, 201, "linear"}));
        const auto ratios = parse_list(mfp_ratios_, "mfp-ratios");
        for (double x : grid) {
            if (!(x >= 0.0 && x < kPi)) {
                throw UsageError("figure3: length_ratio grid must lie in [0, pi); the value at pi is the C_infinity column");
            }
        }
        for (double m : ratios) {
            MediumParams{n_modes_, 0.0, m, power_per_mode_ * n_modes_}.validate();
        }
        const double c_inf = c_infinity(power_per_mode_).bits;
        const quad::Tolerance tol{common_.tol, 0.0, 20000};
        Table t;
        t.columns = {"mfp_ratio", "length_ratio", "C_heterodyne", "C_holevo", "C_holevo_err", "C_infinity"};
        t.rows.resize(grid.size() * ratios.size());
        parallel_for(t.rows.size(), [&](std::size_t k) {
            const double m = ratios[k / grid.size()];
            const double x = grid[k % grid.size()];
            const MediumParams p{n_modes_, x, m, power_per_mode_ * n_modes_};
            const auto het = c_heterodyne_avg(r_eff(p));
            CapacityResult hol;
            if (x == 0.0) {
                hol = c_holevo_noamp(diffusion_averages(p).tau_bar, p.power_per_p0, tol);
            } else {
                hol = c_holevo_avg(p);
            }
            t.rows[k] = {m, x, het.bits, hol.bits, hol.err_estimate, c_inf};
        });
        return t;
    }

    MediumParams point_params() const {
        const bool raw = length_ || mfp_ || amp_length_;
        MediumParams p;
        if (raw) {
            if (!length_ || !mfp_) {
                throw UsageError("point: raw input needs both --length and --mfp");
            }
            if (length_ratio_ || mfp_ratio_) {
                throw UsageError("point: give either raw lengths or --length-ratio/--mfp-ratio, not both");
            }
            const double la = amp_length_.value_or(std::numeric_limits<double>::infinity());
            if (!(*length_ > 0.0) || !(*mfp_ > 0.0) || !(la > 0.0)) {
                throw UsageError("point: lengths must be > 0");
            }
            p = MediumParams::from_lengths(n_modes_, *length_, *mfp_, la, 1.0);
        } else {
            if (!mfp_ratio_) {
                throw UsageError("point: --mfp-ratio (or raw --length/--mfp) is required");
            }
            p.n_modes = n_modes_;
            p.length_ratio = length_ratio_.value_or(0.0);
            p.mfp_ratio = *mfp_ratio_;
        }
        p.power_per_p0 = power_ ? *power_ : power_per_mode_ * n_modes_;
        p.validate();
        return p;
    }

    Table point() {
        const MediumParams p = point_params();
        const double c_inf = c_infinity(p.power_per_mode()).bits;
        const double reff = r_eff(p);
        std::string advisory = p.diffusive_advisory() ? "outside_diffusive_regime" : "";
        double tau = kNan, sigma = kNan, c_hol = kNan, c_hol_err = 0.0;
        if (p.length_ratio >= kPi) {
            tau = sigma = std::numeric_limits<double>::infinity();
            c_hol = c_inf;
            advisory += advisory.empty() ? "threshold_limit" : ";threshold_limit";
        } else {
            const auto avg = diffusion_averages(p);
            tau = avg.tau_bar;
            sigma = avg.sigma_bar;
            const auto hol = p.length_ratio == 0.0
                                 ? c_holevo_noamp(tau, p.power_per_p0, {common_.tol, 0.0, 20000})
                                 : c_holevo_avg(p);
            c_hol = hol.bits;
            c_hol_err = hol.err_estimate;
        }
        MediumParams unamplified = p;
        unamplified.length_ratio = 0.0;
        const double c_noamp =
            c_holevo_noamp(diffusion_averages(unamplified).tau_bar, p.power_per_p0, {common_.tol, 0.0, 20000}).bits;
        Table t;
        t.columns = {"n_modes", "length_ratio", "mfp_ratio", "power_per_mode", "tau_bar", "sigma_bar", "r_eff",
                     "C_heterodyne", "C0", "C_holevo", "C_holevo_err", "C_infinity", "C_holevo_noamp", "region",
                     "advisory"};
        t.rows.push_back({static_cast<std::int64_t>(p.n_modes), p.length_ratio, p.mfp_ratio, p.power_per_mode(), tau,
                          sigma, reff, c_heterodyne_avg(reff).bits, c0_reference(reff).bits, c_hol, c_hol_err, c_inf,
                          c_noamp, std::string(phase::to_string(phase::region_of(p))), advisory});
        return t;
    }

    CLI::App* app_;
    Recorder rec_;
    std::string mode_ = "figure2";
    int n_modes_ = 10;
    double power_per_mode_ = 1.0;
    std::string mfp_ratios_ = "0.05,0.14";
    std::optional<double> length_ratio_;
    std::optional<double> mfp_ratio_;
    std::optional<double> length_;
    std::optional<double> mfp_;
    std::optional<double> amp_length_;
    std::optional<double> power_;
};

}  // namespace

std::unique_ptr<Command> make_capacity(CLI::App& app) { return std::make_unique<CapacityCommand>(app); }

}  // namespace ampcap::cli
