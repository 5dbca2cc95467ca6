// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/cli/table.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace ampcap::cli {
namespace {

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        return format_number(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    if (const auto* u = std::get_if<std::uint64_t>(&c)) {
        return std::to_string(*u);
    }
    return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        // JSON has no NaN; non-finite values travel as text.
        if (!std::isfinite(*d)) {
            return format_number(*d);
        }
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) {
        return *i;
    }
    if (const auto* u = std::get_if<std::uint64_t>(&c)) {
        return *u;
    }
    return std::get<std::string>(c);
}

nlohmann::ordered_json header_object(const std::string& subcommand, const RunConfig& config) {
    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["subcommand"] = subcommand;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : config.entries()) {
        cfg[k] = v;
    }
    doc["config"] = cfg;
    return doc;
}

}  // namespace

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& os, const std::string& subcommand, const RunConfig& config, const Table& table) {
    os << "#@ tool=" << kToolName << '\n';
    os << "#@ version=" << kToolVersion << '\n';
    os << "#@ subcommand=" << subcommand << '\n';
    for (const auto& [k, v] : config.entries()) {
        os << "#@ " << k << '=' << v << '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << csv_escape(table.columns[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_escape(cell_text(row[i]));
        }
        os << '\n';
    }
}

std::string json_header(const std::string& subcommand, const RunConfig& config) {
    return header_object(subcommand, config).dump(2);
}

void write_json(std::ostream& os, const std::string& subcommand, const RunConfig& config, const Table& table,
                const std::string& extra_json) {
    auto doc = header_object(subcommand, config);
    doc["columns"] = table.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            r.push_back(cell_json(c));
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    if (!extra_json.empty()) {
        const auto extra = nlohmann::ordered_json::parse(extra_json);
        for (const auto& [k, v] : extra.items()) {
            doc[k] = v;
        }
    }
    os << doc.dump(2) << '\n';
}

}  // namespace ampcap::cli
