#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "chaoscrypt/arnold.hpp"
#include "chaoscrypt/net.hpp"
#include "chaoscrypt/pixel_grid.hpp"
#include "chaoscrypt/types.hpp"

namespace chaoscrypt {

struct SecretKey;

// Attacker's view of the encryption machinery: submit an image, get its
// ciphertext, learn nothing about the key. Deterministic -- identical
// queries return identical ciphertexts, which is exactly the reuse flaw
// the attack rides on.
class Oracle {
 public:
  virtual ~Oracle() = default;

  PixelGrid encrypt_image(const PixelGrid& img) {
    PixelGrid out = do_encrypt(img);
    ++queries_;
    return out;
  }

  std::uint64_t query_count() const noexcept { return queries_; }

 private:
  virtual PixelGrid do_encrypt(const PixelGrid& img) = 0;

  std::uint64_t queries_ = 0;
};

// In-process oracle running the real cipher under a hidden key. The key
// never appears in responses or error text.
class KeyOracle final : public Oracle {
 public:
  explicit KeyOracle(const SecretKey& key);
  ~KeyOracle() override;

 private:
  PixelGrid do_encrypt(const PixelGrid& img) override;

  std::unique_ptr<SecretKey> key_;
};

// In-process oracle with an injected permutation and keystream; lets
// fixtures run the machinery on literal tables instead of derived ones.
class PartsOracle final : public Oracle {
 public:
  PartsOracle(PermutationMap perm, Keystream ks);

 private:
  PixelGrid do_encrypt(const PixelGrid& img) override;

  PermutationMap perm_;
  Keystream ks_;
};

// Client for a served oracle; speaks the wire protocol over one
// persistent TCP connection. Not usable from multiple threads at once.
class RemoteOracle final : public Oracle {
 public:
  explicit RemoteOracle(const std::string& endpoint);

 private:
  PixelGrid do_encrypt(const PixelGrid& img) override;

  net::Endpoint endpoint_;
  net::Socket sock_;
};

}  // namespace chaoscrypt
