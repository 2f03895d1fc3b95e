#pragma once

// csev/encoding.hpp — the per-field encoding family. Field i of an evidence
// item commits to phi(params, i, event), a domain-separated message:
//
//   m_i = role byte | index byte | params digest | role payload
//
// The role and index bytes keep distinct fields of one event separated; the
// params digest keeps deployments with different parameter sets separated.
// Payload components follow the canonical-encode conventions (4-byte
// big-endian length prefixes for variable-length data, 4-byte counts for
// lists, raw bytes for fixed-width digests), so message length is bounded by
// the event-model caps regardless of referenced payload sizes.

#include "csev/event.hpp"
#include "csev/params.hpp"

namespace csev {

// Worst-case phi output size under the event-model bounds. The dominant
// term is a full reference list entering as digests.
inline constexpr std::size_t kMaxPhiBytes =
    2 + kDigestBytes + 4 + kMaxRefs * kDigestBytes;

// Encode event for field `index`. Pure; throws IndexOutOfRange when
// index >= params.field_count and propagates event validation errors.
Bytes phi(const Params& params, unsigned index, const Event& event);

}  // namespace csev
