#include "csev/error.hpp"

namespace csev {

std::string_view errc_name(errc code) {
  switch (code) {
    case errc::unsupported_suite: return "UnsupportedSuite";
    case errc::invalid_field_count: return "InvalidFieldCount";
    case errc::duplicate_role: return "DuplicateRole";
    case errc::entropy_unavailable: return "EntropyUnavailable";
    case errc::malformed_item: return "MalformedItem";
    case errc::oversize_component: return "OversizeComponent";
    case errc::invalid_digest_width: return "InvalidDigestWidth";
    case errc::malformed_input: return "MalformedInput";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_sequence: return "EmptySequence";
    case errc::length_overflow: return "LengthOverflow";
    case errc::params_mismatch: return "ParamsMismatch";
    case errc::storage_failure: return "StorageFailure";
    case errc::corrupt_record: return "CorruptRecord";
    case errc::missing_event: return "MissingEvent";
    case errc::sink_unavailable: return "SinkUnavailable";
    case errc::sequence_conflict: return "SequenceConflict";
    case errc::signing_error: return "SigningError";
    case errc::encoding_error: return "EncodingError";
  }
  return "UnknownError";
}

}  // namespace csev
