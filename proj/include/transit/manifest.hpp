#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace transit {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(const void* data, std::size_t size,
                      std::uint64_t state = 14695981039346656037ULL);

// Digest of a whole file; nullopt if it cannot be read.
std::optional<std::uint64_t> fnv1a64_file(const std::string& path);

std::string digest_string(std::uint64_t digest);  // "fnv1a64:<hex16>"

std::string utc_timestamp();  // ISO 8601 Z, second resolution

struct ManifestInput {
  std::string path;
  std::optional<std::uint64_t> digest;  // absent for non-seekable inputs
};

/// Reproducibility record embedded in every emitted result document:
/// command, tool version, creation time, resolved config, seed, and input
/// content digests. created_utc is the only field excluded from
/// determinism comparisons.
Json build_manifest(const std::string& command,
                    const std::vector<std::pair<std::string, ManifestInput>>& inputs,
                    const Json& config,
                    std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace transit
