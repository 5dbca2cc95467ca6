// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <sstream>

#include "ampcap/cli/table.hpp"
#include "ampcap/phase.hpp"
#include "commands.hpp"

namespace ampcap::cli {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

class SeparatrixCommand final : public Command {
public:
    explicit SeparatrixCommand(CLI::App& parent)
        : app_(parent.add_subcommand("separatrix", "Boundary between gain-helps and gain-hurts regions")), rec_(app_) {
        common_.tol = 1e-9;
        add_common_options(rec_, common_);
        rec_.option("power-min", scan_.power_min, "Lower end of the P/(N P0) scan");
        rec_.option("power-max", scan_.power_max, "Upper end of the P/(N P0) scan");
        rec_.option("points-per-decade", scan_.points_per_decade, "Scan density for sign changes");
        rec_.flag("asymptote", asymptote_, "Add the small-power asymptote column");
    }

    std::string name() const override { return "separatrix"; }

    int execute(std::ostream& out, std::ostream&) override {
        const auto grid = grid_values(resolve_grid(common_, {0.015, 0.135, 25, "linear"}));
        for (double m : grid) {
            if (!(m > 0.0)) {
                throw UsageError("separatrix: mfp_ratio grid must be > 0");
            }
        }
        if (!(scan_.power_min > 0.0) || !(scan_.power_max > scan_.power_min) || scan_.points_per_decade < 1) {
            throw UsageError("separatrix: need 0 < power-min < power-max and points-per-decade >= 1");
        }
        const auto curve = phase::separatrix_curve(grid, scan_);

        Table t;
        t.columns = {"mfp_ratio", "power_per_mode", "residual", "branch_info"};
        if (asymptote_) {
            t.columns.push_back("asymptote");
        }
        for (const auto& entry : curve) {
            const double asym = phase::small_power_asymptote(entry.mfp_ratio);
            if (entry.roots.empty()) {
                std::vector<Cell> row{entry.mfp_ratio, kNan, kNan,
                                      "no_root(gap_at_min=" + format_number(entry.gap_at_min) +
                                          ";gap_at_max=" + format_number(entry.gap_at_max) + ")"};
                if (asymptote_) {
                    row.emplace_back(asym);
                }
                t.rows.push_back(std::move(row));
                continue;
            }
            const std::size_t n = entry.roots.size();
            for (std::size_t k = 0; k < n; ++k) {
                const auto& pt = entry.roots[k];
                std::string info = n == 1 ? "single" : "branch_" + std::to_string(k + 1) + "_of_" + std::to_string(n);
                if (!(std::abs(pt.residual) <= common_.tol)) {
                    info += ";unconverged";
                }
                std::vector<Cell> row{pt.mfp_ratio, pt.power_per_mode, pt.residual, info};
                if (asymptote_) {
                    row.emplace_back(asym);
                }
                t.rows.push_back(std::move(row));
            }
        }

        std::ostringstream os;
        const auto cfg = rec_.record();
        if (common_.format == "json") {
            write_json(os, name(), cfg, t);
        } else {
            write_csv(os, name(), cfg, t);
        }
        emit(common_, os.str(), out);
        return kExitOk;
    }

private:
    CLI::App* app_;
    Recorder rec_;
    phase::ScanOptions scan_;
    bool asymptote_ = false;
};

}  // namespace

std::unique_ptr<Command> make_separatrix(CLI::App& app) { return std::make_unique<SeparatrixCommand>(app); }

}  // namespace ampcap::cli
