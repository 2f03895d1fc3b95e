#pragma once

// csev/event.hpp — the workflow event model and its canonical serialization.
// Events reference inputs and outputs by digest, never by payload, so every
// downstream cost is independent of payload size. The canonical encoding is
// injective over valid events: every variable-length component carries a
// 4-byte big-endian length prefix, lists carry a 4-byte count, and field
// order is fixed.

#include <cstdint>
#include <string>
#include <vector>

#include "csev/bytes.hpp"

namespace csev {

// Component bounds. Ids and refs come from the event model; the remaining
// caps bound encoder output so per-field hashing cost has a fixed ceiling.
inline constexpr std::size_t kMinIdBytes = 1;
inline constexpr std::size_t kMaxIdBytes = 256;
inline constexpr std::size_t kMaxActorBytes = 1024;
inline constexpr std::size_t kMaxRefs = 1u << 16;
inline constexpr std::size_t kMaxExtensions = 64;
inline constexpr std::size_t kMinExtensionTagBytes = 1;
inline constexpr std::size_t kMaxExtensionTagBytes = 64;
inline constexpr std::size_t kMaxExtensionValueBytes = 4096;

struct Extension {
  std::string tag;  // unique per event
  Bytes value;

  bool operator==(const Extension&) const = default;
};

struct Event {
  Bytes event_id;
  Bytes workflow_id;
  std::string actor;
  std::uint64_t timestamp_us = 0;  // microseconds since Unix epoch
  Digest config_digest{};
  std::vector<Digest> input_refs;
  std::vector<Digest> output_refs;
  Digest env_digest{};   // opaque; may carry a TEE measurement digest
  Digest prev_link{};    // all-zero when there is no prior audit state
  std::vector<Extension> extensions;

  bool operator==(const Event&) const = default;
};

// Throws OversizeComponent / MalformedInput when a component violates the
// bounds above (missing id, too many refs, duplicate extension tag, ...).
void validate_event(const Event& event);

// Deterministic, injective byte encoding. Encoding of structurally equal
// events is identical; any component change alters the output.
Bytes canonical_encode(const Event& event);
// Inverse of canonical_encode; rejects trailing bytes and bound violations.
Event canonical_decode(ByteSpan data);

// Content address of an event: H(canonical_encode(event)).
Digest event_digest(const Event& event);

}  // namespace csev
