// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "ampcap/cli/run_config.hpp"

namespace ampcap::cli {

using Cell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Quotes a field when it contains a delimiter, quote or line break.
std::string csv_escape(const std::string& field);

/// "#@ key=value" header lines, the column header, then one line per row.
void write_csv(std::ostream& os, const std::string& subcommand, const RunConfig& config, const Table& table);

/// {"tool", "version", "subcommand", "config", "columns", "rows", extra members...}
void write_json(std::ostream& os, const std::string& subcommand, const RunConfig& config, const Table& table,
                const std::string& extra_json = {});

std::string json_header(const std::string& subcommand, const RunConfig& config);

}  // namespace ampcap::cli
