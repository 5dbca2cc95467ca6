// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#include "ampcap/cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ampcap::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ConfigEntry split_entry(const std::string& line, const std::string& path, int line_no) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
        throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
    }
    ConfigEntry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (e.key.empty()) {
        throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": empty key");
    }
    return e;
}

std::vector<ConfigEntry> read_json_config(const std::string& text, const std::string& path) {
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("config") || !doc["config"].is_object()) {
        throw std::invalid_argument(path + ": JSON config must be an object with a \"config\" member");
    }
    std::vector<ConfigEntry> out;
    for (const auto& [key, value] : doc["config"].items()) {
        out.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
    }
    return out;
}

}  // namespace

void RunConfig::set(const std::string& key, std::string value) {
    for (auto& [k, v] : entries_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    entries_.emplace_back(key, std::move(value));
}

std::string format_setting(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

bool is_metadata_key(const std::string& key) {
    return key == "tool" || key == "version" || key == "subcommand";
}

std::vector<ConfigEntry> read_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return read_json_config(text, path);
    }

    // A file with "#@" lines is a previous output; only its header is read.
    const bool replay = text.rfind("#@", 0) == 0 || text.find("\n#@") != std::string::npos;
    std::vector<ConfigEntry> out;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.rfind("#@", 0) == 0) {
            out.push_back(split_entry(trim(line.substr(2)), path, line_no));
            continue;
        }
        const std::string t = trim(line);
        if (replay || t.empty() || t[0] == '#') {
            continue;
        }
        out.push_back(split_entry(t, path, line_no));
    }
    return out;
}

}  // namespace ampcap::cli
