#include "csev/event.hpp"

#include <set>

#include "csev/error.hpp"
#include "csev/hash.hpp"

namespace csev {

void validate_event(const Event& event) {
  auto check_id = [](const Bytes& id, const char* name) {
    if (id.size() < kMinIdBytes || id.size() > kMaxIdBytes) {
      raise(errc::oversize_component,
            std::string(name) + " must be 1-" + std::to_string(kMaxIdBytes) +
                " bytes, got " + std::to_string(id.size()));
    }
  };
  check_id(event.event_id, "event_id");
  check_id(event.workflow_id, "workflow_id");
  if (event.actor.size() > kMaxActorBytes) {
    raise(errc::oversize_component, "actor exceeds " +
                                        std::to_string(kMaxActorBytes) + " bytes");
  }
  if (event.input_refs.size() > kMaxRefs || event.output_refs.size() > kMaxRefs) {
    raise(errc::oversize_component,
          "reference list exceeds " + std::to_string(kMaxRefs) + " entries");
  }
  if (event.extensions.size() > kMaxExtensions) {
    raise(errc::oversize_component,
          "more than " + std::to_string(kMaxExtensions) + " extensions");
  }
  std::set<std::string_view> tags;
  for (const Extension& ext : event.extensions) {
    if (ext.tag.size() < kMinExtensionTagBytes ||
        ext.tag.size() > kMaxExtensionTagBytes) {
      raise(errc::oversize_component, "extension tag must be 1-" +
                                          std::to_string(kMaxExtensionTagBytes) +
                                          " bytes");
    }
    if (ext.value.size() > kMaxExtensionValueBytes) {
      raise(errc::oversize_component,
            "extension value exceeds " +
                std::to_string(kMaxExtensionValueBytes) + " bytes");
    }
    if (!tags.insert(ext.tag).second) {
      raise(errc::malformed_input, "duplicate extension tag '" + ext.tag + "'");
    }
  }
}

Bytes canonical_encode(const Event& event) {
  validate_event(event);
  ByteWriter w;
  w.prefixed32(as_span(event.event_id));
  w.prefixed32(as_span(event.workflow_id));
  w.prefixed32(as_span(event.actor));
  w.u64(event.timestamp_us);
  w.raw(as_span(event.config_digest));
  w.u32(static_cast<std::uint32_t>(event.input_refs.size()));
  for (const Digest& ref : event.input_refs) w.raw(as_span(ref));
  w.u32(static_cast<std::uint32_t>(event.output_refs.size()));
  for (const Digest& ref : event.output_refs) w.raw(as_span(ref));
  w.raw(as_span(event.env_digest));
  w.raw(as_span(event.prev_link));
  w.u32(static_cast<std::uint32_t>(event.extensions.size()));
  for (const Extension& ext : event.extensions) {
    w.prefixed32(as_span(ext.tag));
    w.prefixed32(as_span(ext.value));
  }
  return w.take();
}

Event canonical_decode(ByteSpan data) {
  ByteReader r(data, errc::malformed_input, "canonical event");
  Event event;
  event.event_id = r.prefixed32(kMaxIdBytes);
  event.workflow_id = r.prefixed32(kMaxIdBytes);
  Bytes actor = r.prefixed32(kMaxActorBytes);
  event.actor.assign(actor.begin(), actor.end());
  event.timestamp_us = r.u64();
  event.config_digest = r.digest();
  std::uint32_t n_in = r.u32();
  if (n_in > kMaxRefs) r.fail("too many input refs");
  event.input_refs.reserve(n_in);
  for (std::uint32_t i = 0; i < n_in; ++i) event.input_refs.push_back(r.digest());
  std::uint32_t n_out = r.u32();
  if (n_out > kMaxRefs) r.fail("too many output refs");
  event.output_refs.reserve(n_out);
  for (std::uint32_t i = 0; i < n_out; ++i) event.output_refs.push_back(r.digest());
  event.env_digest = r.digest();
  event.prev_link = r.digest();
  std::uint32_t n_ext = r.u32();
  if (n_ext > kMaxExtensions) r.fail("too many extensions");
  for (std::uint32_t i = 0; i < n_ext; ++i) {
    Extension ext;
    Bytes tag = r.prefixed32(kMaxExtensionTagBytes);
    ext.tag.assign(tag.begin(), tag.end());
    ext.value = r.prefixed32(kMaxExtensionValueBytes);
    event.extensions.push_back(std::move(ext));
  }
  r.expect_done();
  validate_event(event);
  return event;
}

Digest event_digest(const Event& event) {
  return sha256(as_span(canonical_encode(event)));
}

}  // namespace csev
