#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace packsat {

// Self-contained SHA-256; used for file digests in manifests and
// certificates.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

}  // namespace packsat
