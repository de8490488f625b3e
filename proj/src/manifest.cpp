#include "nofactor/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <memory>
#include <sstream>

#include "nofactor/errors.hpp"

namespace nofactor {

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 0xf]);
    }
    return out;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

namespace {

json digests(const std::vector<DigestEntry>& entries) {
    json out = json::array();
    for (const auto& e : entries) {
        out.push_back({{"role", e.role}, {"sha256", e.sha256}});
    }
    return out;
}

}  // namespace

std::string RunManifest::run_digest() const {
    const json in{{"subcommand", subcommand},
                  {"inputs", digests(inputs)},
                  {"parameters", parameters},
                  {"bounds", bounds},
                  {"toolVersion", tool_version}};
    return sha256_hex(in.dump());
}

json RunManifest::to_json() const {
    return {{"schema", kManifestSchema},
            {"subcommand", subcommand},
            {"inputs", digests(inputs)},
            {"parameters", parameters},
            {"bounds", bounds},
            {"toolVersion", tool_version},
            {"runDigest", run_digest()},
            {"outputs", digests(outputs)}};
}

}  // namespace nofactor
