#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace flatlab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

/// {tool, version, input_digest, command, parameters, payload, wall_time_ms}.
nlohmann::json make_envelope(std::string_view command, std::string_view input_text,
                             nlohmann::json parameters, nlohmann::json payload, double wall_time_ms);

}  // namespace flatlab::cli
