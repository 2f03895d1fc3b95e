#pragma once

// csev/hash.hpp — the suite v1 hash function (SHA-256) behind an instrumented
// wrapper. Every finalized digest bumps a thread-local call counter so tests
// and benchmarks can account for hash evaluations per operation.

#include <cstdint>
#include <initializer_list>

#include "csev/bytes.hpp"

namespace csev {

// Incremental SHA-256. State is stored inline; no allocation per hash.
class Sha256 {
 public:
  Sha256();
  Sha256& update(ByteSpan data);
  Digest finalize();

 private:
  alignas(16) unsigned char state_[128];
};

Digest sha256(ByteSpan data);
Digest sha256(std::initializer_list<ByteSpan> parts);

// Hash evaluations finalized on the calling thread since the last reset.
std::uint64_t hash_calls();
void reset_hash_calls();

}  // namespace csev
