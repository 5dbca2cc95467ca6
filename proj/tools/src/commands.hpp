// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "ampcap/cli/cli.hpp"
#include "options.hpp"

namespace ampcap::cli {

/// One subcommand: registers its options, then runs once parsing succeeded.
class Command {
public:
    virtual ~Command() = default;
    virtual std::string name() const = 0;
    virtual int execute(std::ostream& out, std::ostream& err) = 0;
    const CommonOptions& common() const { return common_; }

protected:
    CommonOptions common_;
};

std::unique_ptr<Command> make_capacity(CLI::App& app);
std::unique_ptr<Command> make_validate(CLI::App& app);
std::unique_ptr<Command> make_simulate(CLI::App& app);
std::unique_ptr<Command> make_separatrix(CLI::App& app);

}  // namespace ampcap::cli
