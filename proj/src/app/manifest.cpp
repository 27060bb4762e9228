#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>

#include "fcip/app.hpp"
#include "fcip/error.hpp"

namespace fcip::app {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw Error("sha256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string toolkit_version() { return FCIP_VERSION; }

Json RunManifest::to_json() const {
  Json o = Json::object();
  for (const auto& [k, v] : overrides) o[k] = v;
  return Json{{"command", command},
              {"inputs", inputs},
              {"seed", seed},
              {"overrides", o},
              {"version", version},
              {"output_digest", output_digest}};
}

}  // namespace fcip::app
