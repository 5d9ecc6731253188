#include "flatlab_cli/envelope.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace flatlab::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string out;
  out.reserve(2 * len);
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

nlohmann::json make_envelope(std::string_view command, std::string_view input_text,
                             nlohmann::json parameters, nlohmann::json payload, double wall_time_ms) {
  return {{"tool", "flatlab"},
          {"version", kToolVersion},
          {"input_digest", input_text.empty() ? nlohmann::json(nullptr)
                                              : nlohmann::json("sha256:" + sha256_hex(input_text))},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"payload", std::move(payload)},
          {"wall_time_ms", wall_time_ms}};
}

}  // namespace flatlab::cli
