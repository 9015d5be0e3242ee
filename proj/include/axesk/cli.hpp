#pragma once

// Command-line front end. Every subcommand produces an OutputDocument, which
// is printed either as human text or as canonical JSON (sorted keys, two-space
// indent, integers only).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "axesk/common.hpp"

namespace axesk::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kBudgetEnvVar = "AXESK_ENUM_BUDGET";

struct OutputDocument {
    std::string schema_version = kSchemaVersion;
    std::string command;
    nlohmann::json query = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    /// Human rendering, one or more lines without the trailing newline.
    std::string text;

    bool operator==(const OutputDocument&) const = default;
};

nlohmann::json to_json(const OutputDocument& document);
OutputDocument document_from_json(const nlohmann::json& value);

/// Canonical serialization, newline-terminated.
std::string render_json(const OutputDocument& document);

/// Integers that fit in int64 become JSON numbers, larger ones strings.
nlohmann::json big_to_json(const BigInt& value);

/// Enumeration budget, from AXESK_ENUM_BUDGET when set.
std::uint64_t enumeration_budget();

/// Runs the CLI; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace axesk::cli
