// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ampcap/capacity.hpp"
#include "ampcap/cli/table.hpp"
#include "ampcap/stats.hpp"
#include "ampcap/wgsim.hpp"
#include "commands.hpp"

namespace ampcap::cli {
namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return format_number(v);
}

class SimulateCommand final : public Command {
public:
    explicit SimulateCommand(CLI::App& parent)
        : app_(parent.add_subcommand("simulate", "Disordered-strip scattering ensembles")), rec_(app_) {
        common_.samples = 1000;
        common_.tol = 1e-10;
        add_common_options(rec_, common_);
        rec_.option("width", spec_.width, "Transverse sites");
        rec_.option("length", spec_.length, "Longitudinal sites of the active region");
        rec_.option("disorder", spec_.disorder_strength, "On-site disorder W, uniform in [-W/2, W/2]");
        rec_.option("gain", spec_.gain, "Uniform gain (imaginary on-site energy)");
        rec_.option("energy", spec_.energy, "Operating energy in hopping units");
        rec_.option("alpha", alpha_, "Sender mode index, 0-based (-1: middle mode)");
        rec_.option("beta", beta_, "Receiver mode index, 0-based (-1: middle mode)");
        rec_.option("power", power_, "P / P0 for the per-sample capacity summary");
        rec_.flag("calibrate", calibrate_, "Fit the transport mean free path first");
        rec_.option("calibrate-lengths", calibrate_lengths_, "Comma-separated lengths for the fit");
        rec_.option("calibrate-samples", calibrate_samples_, "Samples per calibration length");
        rec_.unrecorded("summary", summary_path_, "Also write the JSON summary to this file");
    }

    std::string name() const override { return "simulate"; }

    int execute(std::ostream& out, std::ostream& err) override {
        if (common_.samples < 1) {
            throw UsageError("simulate: samples must be >= 1");
        }
        if (!(power_ > 0.0)) {
            throw UsageError("simulate: power must be > 0");
        }
        spec_.seed = common_.seed;
        spec_.validate();
        const int n_modes = wgsim::propagating_modes(spec_);
        const int alpha = alpha_ < 0 ? wgsim::default_mode(spec_) : alpha_;
        const int beta = beta_ < 0 ? wgsim::default_mode(spec_) : beta_;

        ordered_json calibration;
        if (calibrate_) {
            const auto lengths = parse_int_list(calibrate_lengths_, "calibrate-lengths");
            if (calibrate_samples_ < 1) {
                throw UsageError("simulate: calibrate-samples must be >= 1");
            }
            const auto fit =
                wgsim::calibrate_mfp(spec_, lengths, static_cast<std::size_t>(calibrate_samples_));
            calibration["mfp"] = fit.mfp;
            calibration["residual"] = fit.residual;
            calibration["lengths"] = fit.lengths;
            calibration["mean_conductance"] = fit.mean_conductance;
            calibration["per_length_mfp"] = fit.per_length_mfp;
            calibration["length_over_mfp"] = spec_.length / fit.mfp;
        }

        const auto st = wgsim::run_ensemble(spec_, static_cast<std::size_t>(common_.samples), alpha, beta);
        const auto tau = summarize(st.tau_samples);
        const auto sigma = summarize(st.sigma_samples);
        const auto ks = ks_exponential(st.tau_samples, st.tau_bar_hat);
        const auto cap = wgsim::mean_heterodyne_capacity(st, power_);

        ordered_json summary;
        summary["spec"] = {{"width", spec_.width},         {"length", spec_.length},
                           {"disorder", spec_.disorder_strength}, {"gain", spec_.gain},
                           {"energy", spec_.energy},       {"seed", spec_.seed}};
        summary["n_modes"] = n_modes;
        summary["alpha"] = alpha;
        summary["beta"] = beta;
        summary["n_samples"] = st.n_samples;
        summary["tau_bar_hat"] = st.tau_bar_hat;
        summary["tau_std_error"] = tau.std_error;
        summary["sigma_bar_hat"] = st.sigma_bar_hat;
        summary["sigma_std_error"] = sigma.std_error;
        summary["mean_conductance"] = summarize(st.conductance_samples).mean;
        summary["ks_statistic"] = ks.statistic;
        summary["ks_p_value"] = ks.p_value;
        summary["min_eig"] = st.min_eig_ssdagger;
        summary["unitarity_max_violation"] = st.max_unitarity_violation;
        if (spec_.gain == 0.0) {
            summary["unitarity_ok"] = st.max_unitarity_violation <= common_.tol;
        } else {
            summary["super_unitary_ok"] = st.min_eig_ssdagger >= -common_.tol;
        }
        summary["power"] = power_;
        summary["mean_heterodyne_capacity"] = number(cap.mean);
        summary["mean_heterodyne_capacity_std_error"] = number(cap.std_error);
        summary["matched_heterodyne_avg"] =
            number(c_heterodyne_avg(power_ * st.tau_bar_hat / st.sigma_bar_hat).bits);
        if (calibrate_) {
            summary["calibration"] = calibration;
        }

        Table table;
        table.columns = {"sample_index", "tau", "sigma", "min_eig", "seed"};
        for (std::size_t i = 0; i < st.n_samples; ++i) {
            table.rows.push_back({static_cast<std::int64_t>(i), st.tau_samples[i], st.sigma_samples[i],
                                  st.min_eig_samples[i], st.seeds[i]});
        }

        const auto cfg = rec_.record();
        std::ostringstream os;
        if (common_.format == "json") {
            ordered_json extra;
            extra["summary"] = summary;
            write_json(os, name(), cfg, table, extra.dump());
        } else {
            write_csv(os, name(), cfg, table);
        }
        emit(common_, os.str(), out);
        if (!summary_path_.empty()) {
            auto doc = ordered_json::parse(json_header(name(), cfg));
            doc["summary"] = summary;
            CommonOptions target = common_;
            target.out = summary_path_;
            emit(target, doc.dump(2) + "\n", out);
        }
        err << "simulate: " << st.n_samples << " samples, tau_bar_hat=" << format_number(st.tau_bar_hat)
            << ", ks_p_value=" << format_number(ks.p_value) << "\n";
        return kExitOk;
    }

private:
    CLI::App* app_;
    Recorder rec_;
    wgsim::LatticeSpec spec_;
    int alpha_ = -1;
    int beta_ = -1;
    double power_ = 10.0;
    bool calibrate_ = false;
    std::string calibrate_lengths_ = "50,100,200";
    std::int64_t calibrate_samples_ = 200;
    std::string summary_path_;
};

}  // namespace

std::unique_ptr<Command> make_simulate(CLI::App& app) { return std::make_unique<SimulateCommand>(app); }

}  // namespace ampcap::cli
