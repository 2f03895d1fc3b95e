#include "csev/encoding.hpp"

#include "csev/error.hpp"

namespace csev {

Bytes phi(const Params& params, unsigned index, const Event& event) {
  if (index >= params.field_count) {
    raise(errc::index_out_of_range,
          "field index " + std::to_string(index) + " >= k = " +
              std::to_string(params.field_count));
  }
  validate_event(event);

  FieldRole role = params.field_roles[index];
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(role));
  w.u8(static_cast<std::uint8_t>(index));
  w.raw(as_span(params.params_digest));

  switch (role) {
    case FieldRole::context:
      w.prefixed32(as_span(event.workflow_id));
      w.prefixed32(as_span(event.event_id));
      break;
    case FieldRole::inputs:
      w.u32(static_cast<std::uint32_t>(event.input_refs.size()));
      for (const Digest& ref : event.input_refs) w.raw(as_span(ref));
      break;
    case FieldRole::outputs:
      w.u32(static_cast<std::uint32_t>(event.output_refs.size()));
      for (const Digest& ref : event.output_refs) w.raw(as_span(ref));
      break;
    case FieldRole::config:
      w.raw(as_span(event.config_digest));
      break;
    case FieldRole::environment:
      w.raw(as_span(event.env_digest));
      break;
    case FieldRole::link:
      w.raw(as_span(event.prev_link));
      break;
    case FieldRole::time_actor:
      w.u64(event.timestamp_us);
      w.prefixed32(as_span(event.actor));
      break;
    case FieldRole::extension:
      w.u32(static_cast<std::uint32_t>(event.extensions.size()));
      for (const Extension& ext : event.extensions) {
        w.prefixed32(as_span(ext.tag));
        w.prefixed32(as_span(ext.value));
      }
      break;
  }
  return w.take();
}

}  // namespace csev
