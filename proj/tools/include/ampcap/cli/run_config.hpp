// Copyright 2026 The ampcap Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ampcap::cli {

inline constexpr const char* kToolName = "ampcap";
inline constexpr const char* kToolVersion = "1.0.0";

/// Ordered key=value record of every setting that shapes an output file.
class RunConfig {
public:
    void set(const std::string& key, std::string value);
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Round-trip formatting used for recorded floating-point settings.
std::string format_setting(double v);

/// Fixed scientific notation with 9 significant digits.
std::string format_number(double v);

struct ConfigEntry {
    std::string key;
    std::string value;
};

/// Reads a config file. Accepts plain key=value lines with '#' comments, a CSV
/// output whose "#@ key=value" header lines carry the run record, or a JSON
/// output with a "config" object.
std::vector<ConfigEntry> read_config_file(const std::string& path);

/// Keys written as provenance rather than options.
bool is_metadata_key(const std::string& key);

}  // namespace ampcap::cli
