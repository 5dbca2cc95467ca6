// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/cli/cli.hpp"

#include <algorithm>
#include <memory>

#include "ampcap/errors.hpp"
#include "ampcap/parallel.hpp"
#include "commands.hpp"

namespace ampcap::cli {
namespace {

struct Extracted {
    std::vector<std::string> args;
    std::string config_path;
};

/// Removes --config so its entries can be placed ahead of the explicit flags.
Extracted extract_config(const std::vector<std::string>& args) {
    Extracted ex;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a file name");
            }
            ex.config_path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            ex.config_path = a.substr(9);
        } else {
            ex.args.push_back(a);
        }
    }
    return ex;
}

std::vector<std::string> expand(const std::vector<std::string>& args, std::ostream& err) {
    auto ex = extract_config(args);
    if (ex.config_path.empty()) {
        return ex.args;
    }
    if (ex.args.empty() || ex.args.front().rfind("-", 0) == 0) {
        throw UsageError("--config must follow a subcommand");
    }
    const std::string& sub = ex.args.front();
    std::vector<std::string> out{sub};
    for (const auto& e : read_config_file(ex.config_path)) {
        if (e.key == "subcommand" && e.value != sub) {
            throw UsageError("config file '" + ex.config_path + "' was recorded for subcommand '" + e.value +
                             "', not '" + sub + "'");
        }
        if (e.key == "version" && e.value != kToolVersion) {
            err << "warning: config recorded by version " << e.value << ", running " << kToolVersion << "\n";
        }
        if (is_metadata_key(e.key)) {
            continue;
        }
        out.push_back("--" + e.key + "=" + e.value);
    }
    out.insert(out.end(), ex.args.begin() + 1, ex.args.end());
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Information capacity of amplifying disordered waveguides", kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    std::vector<std::unique_ptr<Command>> commands;
    commands.push_back(make_capacity(app));
    commands.push_back(make_validate(app));
    commands.push_back(make_simulate(app));
    commands.push_back(make_separatrix(app));

    try {
        auto tokens = expand(args, err);
        std::reverse(tokens.begin(), tokens.end());
        app.parse(tokens);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    Command* cmd = nullptr;
    for (auto& c : commands) {
        if (app.got_subcommand(c->name())) {
            cmd = c.get();
        }
    }
    if (cmd == nullptr) {
        err << app.help();
        return kExitUsage;
    }

    const unsigned saved_threads = thread_count();
    if (cmd->common().threads > 0) {
        set_thread_count(cmd->common().threads);
    }
    int code = kExitFailure;
    try {
        code = cmd->execute(out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const LasingInstabilityError& e) {
        err << "error: lasing instability at sample " << e.sample_index() << ": " << e.what() << "\n";
        code = kExitFailure;
    } catch (const DomainError& e) {
        err << "error: invalid parameter: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const DimensionError& e) {
        err << "error: invalid dimensions: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const ThresholdError& e) {
        err << "error: " << e.what() << "\n";
        code = kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = kExitFailure;
    }
    set_thread_count(saved_threads);
    return code;
}

}  // namespace ampcap::cli
