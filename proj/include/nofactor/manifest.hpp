#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nofactor/json_io.hpp"

namespace nofactor {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kManifestSchema = "nofactor.manifest/1";

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);
/// Throws ParseError if the file cannot be read.
std::string sha256_file(const std::string& path);

struct DigestEntry {
    std::string role;  // "complex", "certificate", ... for inputs; file name for outputs
    std::string sha256;

    friend bool operator==(const DigestEntry&, const DigestEntry&) = default;
};

struct RunManifest {
    std::string subcommand;
    std::vector<DigestEntry> inputs;
    json parameters = json::object();
    json bounds = json::object();
    std::string tool_version = kToolVersion;
    std::vector<DigestEntry> outputs;

    /// Digest of everything but the outputs. Artifacts embed this value, so
    /// including the outputs would be circular.
    std::string run_digest() const;
    json to_json() const;
};

}  // namespace nofactor
