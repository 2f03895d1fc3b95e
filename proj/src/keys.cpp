#include "csev/keys.hpp"

#include <sodium.h>
#include <sys/stat.h>

#include <cstdio>
#include <fstream>
#include <mutex>

#include "csev/error.hpp"
#include "csev/hash.hpp"
#include "csev/params.hpp"

namespace csev {

namespace {

constexpr char kSecretMagic[4] = {'C', 'S', 'S', 'K'};
constexpr char kPublicMagic[4] = {'C', 'S', 'P', 'K'};
constexpr std::uint16_t kKeyFileVersion = 1;

void ensure_sodium() {
  static std::once_flag flag;
  static int status = 0;
  std::call_once(flag, [] { status = sodium_init(); });
  if (status < 0) {
    raise(errc::entropy_unavailable, "libsodium initialization failed");
  }
}

KeyPair finish_keypair(const SecretKey& sk, const PublicKey& pk) {
  KeyPair kp;
  kp.secret_key = sk;
  kp.public_key = pk;
  kp.key_fingerprint = sha256(as_span(pk));
  return kp;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::storage_failure, "cannot open " + path.string());
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, ByteSpan data, bool overwrite,
                bool restrict_mode) {
  if (!overwrite && std::filesystem::exists(path)) {
    raise(errc::storage_failure,
          "refusing to overwrite existing file " + path.string());
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) raise(errc::storage_failure, "cannot open " + path.string());
  if (restrict_mode) {
    chmod(path.c_str(), S_IRUSR | S_IWUSR);
  }
  std::size_t written = std::fwrite(data.data(), 1, data.size(), f);
  int rc = std::fclose(f);
  if (written != data.size() || rc != 0) {
    raise(errc::storage_failure, "write failed: " + path.string());
  }
}

std::string read_suite_id(ByteReader& r) {
  Bytes suite = r.prefixed16(64);
  return std::string(suite.begin(), suite.end());
}

}  // namespace

KeyPair keygen() {
  ensure_sodium();
  SecretKey sk{};
  PublicKey pk{};
  if (crypto_sign_keypair(pk.data(), sk.data()) != 0) {
    raise(errc::entropy_unavailable, "key generation failed");
  }
  return finish_keypair(sk, pk);
}

KeyPair keygen(const Seed& seed) {
  ensure_sodium();
  SecretKey sk{};
  PublicKey pk{};
  if (crypto_sign_seed_keypair(pk.data(), sk.data(), seed.data()) != 0) {
    raise(errc::entropy_unavailable, "seeded key derivation failed");
  }
  return finish_keypair(sk, pk);
}

Signature sign_message(const SecretKey& sk, ByteSpan message) {
  ensure_sodium();
  Signature sig{};
  if (crypto_sign_detached(sig.data(), nullptr, message.data(), message.size(),
                           sk.data()) != 0) {
    raise(errc::signing_error, "signature computation failed");
  }
  return sig;
}

bool verify_signature(const PublicKey& pk, ByteSpan message, const Signature& sig) {
  ensure_sodium();
  return crypto_sign_verify_detached(sig.data(), message.data(), message.size(),
                                     pk.data()) == 0;
}

VerifierKey VerifierKey::from_public_key(const PublicKey& pk) {
  return VerifierKey{pk, sha256(as_span(pk))};
}

VerifierKey VerifierKey::from_keypair(const KeyPair& kp) {
  return VerifierKey{kp.public_key, kp.key_fingerprint};
}

void save_secret_key(const std::filesystem::path& path, const KeyPair& kp,
                     bool overwrite) {
  ByteWriter w;
  w.raw(ByteSpan(reinterpret_cast<const std::uint8_t*>(kSecretMagic), 4));
  w.u16(kKeyFileVersion);
  w.prefixed16(as_span(kSuiteV1));
  w.raw(ByteSpan(kp.secret_key.data(), kp.secret_key.size()));
  w.raw(ByteSpan(kp.public_key.data(), kp.public_key.size()));
  w.raw(as_span(kp.key_fingerprint));
  write_file(path, as_span(w.bytes()), overwrite, /*restrict_mode=*/true);
}

KeyPair load_secret_key(const std::filesystem::path& path) {
  Bytes data = read_file(path);
  ByteReader r(as_span(data), errc::malformed_input, "secret key " + path.string());
  ByteSpan magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kSecretMagic)) r.fail("bad magic");
  if (r.u16() != kKeyFileVersion) r.fail("unsupported version");
  if (read_suite_id(r) != kSuiteV1) r.fail("unsupported suite");
  KeyPair kp;
  ByteSpan sk = r.raw(kp.secret_key.size());
  std::copy(sk.begin(), sk.end(), kp.secret_key.begin());
  ByteSpan pk = r.raw(kp.public_key.size());
  std::copy(pk.begin(), pk.end(), kp.public_key.begin());
  kp.key_fingerprint = r.digest();
  r.expect_done();
  if (kp.key_fingerprint != sha256(as_span(kp.public_key))) {
    r.fail("fingerprint does not match public key");
  }
  return kp;
}

void save_public_key(const std::filesystem::path& path, const KeyPair& kp,
                     bool overwrite) {
  ByteWriter w;
  w.raw(ByteSpan(reinterpret_cast<const std::uint8_t*>(kPublicMagic), 4));
  w.u16(kKeyFileVersion);
  w.prefixed16(as_span(kSuiteV1));
  w.raw(ByteSpan(kp.public_key.data(), kp.public_key.size()));
  w.raw(as_span(kp.key_fingerprint));
  write_file(path, as_span(w.bytes()), overwrite, /*restrict_mode=*/false);
}

VerifierKey load_public_key(const std::filesystem::path& path) {
  Bytes data = read_file(path);
  ByteReader r(as_span(data), errc::malformed_input, "public key " + path.string());
  ByteSpan magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kPublicMagic)) r.fail("bad magic");
  if (r.u16() != kKeyFileVersion) r.fail("unsupported version");
  if (read_suite_id(r) != kSuiteV1) r.fail("unsupported suite");
  VerifierKey key;
  ByteSpan pk = r.raw(key.public_key.size());
  std::copy(pk.begin(), pk.end(), key.public_key.begin());
  key.fingerprint = r.digest();
  r.expect_done();
  if (key.fingerprint != sha256(as_span(key.public_key))) {
    r.fail("fingerprint does not match public key");
  }
  return key;
}

}  // namespace csev
