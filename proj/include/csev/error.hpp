#pragma once

// csev/error.hpp — error codes and the exception type used across the library.
//
// Operational faults (I/O, bad configuration, malformed caller input) throw
// Error. Audit verdicts never throw: verification paths report reject
// reasons through VerifyOutcome so tampering is distinguishable from faults.

#include <stdexcept>
#include <string>
#include <string_view>

namespace csev {

enum class errc {
  unsupported_suite,
  invalid_field_count,
  duplicate_role,
  entropy_unavailable,
  malformed_item,
  oversize_component,
  invalid_digest_width,
  malformed_input,
  index_out_of_range,
  empty_sequence,
  length_overflow,
  params_mismatch,
  storage_failure,
  corrupt_record,
  missing_event,
  sink_unavailable,
  sequence_conflict,
  signing_error,
  encoding_error,
};

std::string_view errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace csev
