#include "chaoscrypt/oracle.hpp"

#include <utility>

#include "chaoscrypt/cipher.hpp"
#include "chaoscrypt/key.hpp"
#include "chaoscrypt/wire.hpp"

namespace chaoscrypt {

KeyOracle::KeyOracle(const SecretKey& key) : key_(std::make_unique<SecretKey>(key)) {
  validate_key(*key_);
}

KeyOracle::~KeyOracle() = default;

PixelGrid KeyOracle::do_encrypt(const PixelGrid& img) { return encrypt(img, *key_); }

PartsOracle::PartsOracle(PermutationMap perm, Keystream ks)
    : perm_(std::move(perm)), ks_(std::move(ks)) {}

PixelGrid PartsOracle::do_encrypt(const PixelGrid& img) {
  return encrypt_with_parts(img, perm_, ks_);
}

RemoteOracle::RemoteOracle(const std::string& endpoint)
    : endpoint_(net::parse_endpoint(endpoint)) {}

PixelGrid RemoteOracle::do_encrypt(const PixelGrid& img) {
  if (!sock_.valid()) {
    sock_ = net::connect_to(endpoint_);
  }
  try {
    wire::send_query(sock_, img);
    return wire::read_reply(sock_);
  } catch (...) {
    // Frame discipline is lost; force a fresh connection next time.
    sock_.close();
    throw;
  }
}

}  // namespace chaoscrypt
