#pragma once

// csev/params.hpp — public parameters: field count k, field width, the field
// role registry, and the crypto suite identifier. Params are immutable after
// setup; params_digest commits to the canonical serialization and is mixed
// into every signature payload so evidence cannot be replayed under a
// different parameter set.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "csev/bytes.hpp"
#include "csev/hash.hpp"

namespace csev {

inline constexpr std::string_view kSuiteV1 = "v1";
inline constexpr unsigned kMinFieldCount = 1;
inline constexpr unsigned kMaxFieldCount = 64;
inline constexpr unsigned kFieldBytesV1 = 32;  // 256-bit fields

// Field roles select the per-index encoder. The "extension" role is the only
// one that may appear more than once; the index byte keeps repeated
// extension fields domain-separated.
enum class FieldRole : std::uint8_t {
  context = 0,
  inputs = 1,
  outputs = 2,
  config = 3,
  environment = 4,
  link = 5,
  time_actor = 6,
  extension = 7,
};

std::string_view role_name(FieldRole role);
std::optional<FieldRole> role_from_name(std::string_view name);

struct Params {
  std::uint8_t field_count = 0;
  std::uint16_t field_bytes = 0;
  std::vector<FieldRole> field_roles;
  std::string suite_id;
  Digest params_digest{};
};

// Default registry: the eight standard roles in order for k <= 8, and
// additional extension fields beyond that.
std::vector<FieldRole> default_roles(unsigned field_count);

Params setup(unsigned field_count, std::string_view suite_id,
             std::vector<FieldRole> field_roles);

// Canonical serialization: "CSEV" | version u16 | k u8 | field bytes u16 |
// suite id (u16-prefixed UTF-8) | k role tags (each u16-prefixed UTF-8).
Bytes serialize_params(const Params& params);
// Parses and recomputes the digest; rejects malformed or unsupported input.
// The reader form consumes exactly one params block, for formats that embed
// params in a larger header.
Params read_params(ByteReader& r);
Params parse_params(ByteSpan data);

void save_params(const std::filesystem::path& path, const Params& params,
                 bool overwrite = false);
Params load_params(const std::filesystem::path& path);

}  // namespace csev
