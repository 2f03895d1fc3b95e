#include "csev/hash.hpp"

#include <sodium.h>

namespace csev {

namespace {
thread_local std::uint64_t t_hash_calls = 0;
}

static_assert(sizeof(crypto_hash_sha256_state) <= 128,
              "inline hash state too small for libsodium");

Sha256::Sha256() {
  crypto_hash_sha256_init(reinterpret_cast<crypto_hash_sha256_state*>(state_));
}

Sha256& Sha256::update(ByteSpan data) {
  crypto_hash_sha256_update(reinterpret_cast<crypto_hash_sha256_state*>(state_),
                            data.data(), data.size());
  return *this;
}

Digest Sha256::finalize() {
  Digest out{};
  crypto_hash_sha256_final(reinterpret_cast<crypto_hash_sha256_state*>(state_),
                           out.data());
  ++t_hash_calls;
  return out;
}

Digest sha256(ByteSpan data) {
  return Sha256().update(data).finalize();
}

Digest sha256(std::initializer_list<ByteSpan> parts) {
  Sha256 h;
  for (auto p : parts) h.update(p);
  return h.finalize();
}

std::uint64_t hash_calls() { return t_hash_calls; }

void reset_hash_calls() { t_hash_calls = 0; }

}  // namespace csev
