#pragma once

// csev/keys.hpp — suite v1 key material: Ed25519 signing/verification keys,
// deterministic derivation from a 32-byte seed for reproducible tests, and
// the key file formats used by the CLI. Signing is deterministic (RFC 8032),
// so identical inputs always produce identical signatures.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "csev/bytes.hpp"

namespace csev {

using SecretKey = std::array<std::uint8_t, 64>;
using PublicKey = std::array<std::uint8_t, 32>;
using Signature = std::array<std::uint8_t, 64>;
using Seed = std::array<std::uint8_t, 32>;

inline constexpr std::size_t kSignatureBytes = 64;
inline constexpr std::size_t kPublicKeyBytes = 32;

struct KeyPair {
  SecretKey secret_key{};
  PublicKey public_key{};
  Digest key_fingerprint{};  // H(public_key) under the suite hash
};

KeyPair keygen();                 // system entropy
KeyPair keygen(const Seed& seed); // deterministic test mode

Signature sign_message(const SecretKey& sk, ByteSpan message);
bool verify_signature(const PublicKey& pk, ByteSpan message, const Signature& sig);

// A verification key with its fingerprint computed once at load, so each
// evidence verification costs exactly the k field hashes.
struct VerifierKey {
  PublicKey public_key{};
  Digest fingerprint{};

  static VerifierKey from_public_key(const PublicKey& pk);
  static VerifierKey from_keypair(const KeyPair& kp);
};

// Key files. Secret: "CSSK" | version u16 | suite id (u16-prefixed) |
// 64-byte secret | 32-byte public | 32-byte fingerprint, mode 0600.
// Public: "CSPK" | version u16 | suite id (u16-prefixed) | 32-byte public |
// 32-byte fingerprint.
void save_secret_key(const std::filesystem::path& path, const KeyPair& kp,
                     bool overwrite = false);
KeyPair load_secret_key(const std::filesystem::path& path);
void save_public_key(const std::filesystem::path& path, const KeyPair& kp,
                     bool overwrite = false);
VerifierKey load_public_key(const std::filesystem::path& path);

}  // namespace csev
