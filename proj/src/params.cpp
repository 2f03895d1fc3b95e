#include "csev/params.hpp"

#include <fstream>
#include <set>

#include "csev/error.hpp"

namespace csev {

namespace {

constexpr char kParamsMagic[4] = {'C', 'S', 'E', 'V'};
constexpr std::uint16_t kParamsVersion = 1;

}  // namespace

std::string_view role_name(FieldRole role) {
  switch (role) {
    case FieldRole::context: return "context";
    case FieldRole::inputs: return "inputs";
    case FieldRole::outputs: return "outputs";
    case FieldRole::config: return "config";
    case FieldRole::environment: return "environment";
    case FieldRole::link: return "link";
    case FieldRole::time_actor: return "time_actor";
    case FieldRole::extension: return "extension";
  }
  return "unknown";
}

std::optional<FieldRole> role_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(FieldRole::extension); ++i) {
    auto role = static_cast<FieldRole>(i);
    if (role_name(role) == name) return role;
  }
  return std::nullopt;
}

std::vector<FieldRole> default_roles(unsigned field_count) {
  static constexpr FieldRole kStandard[8] = {
      FieldRole::context,     FieldRole::inputs, FieldRole::outputs,
      FieldRole::config,      FieldRole::environment,
      FieldRole::link,        FieldRole::time_actor,
      FieldRole::extension,
  };
  std::vector<FieldRole> roles;
  roles.reserve(field_count);
  for (unsigned i = 0; i < field_count; ++i) {
    roles.push_back(i < 8 ? kStandard[i] : FieldRole::extension);
  }
  return roles;
}

Params setup(unsigned field_count, std::string_view suite_id,
             std::vector<FieldRole> field_roles) {
  if (suite_id != kSuiteV1) {
    raise(errc::unsupported_suite, "unknown suite '" + std::string(suite_id) + "'");
  }
  if (field_count < kMinFieldCount || field_count > kMaxFieldCount) {
    raise(errc::invalid_field_count,
          "field count " + std::to_string(field_count) + " outside [1, 64]");
  }
  if (field_roles.size() != field_count) {
    raise(errc::invalid_field_count,
          "role list has " + std::to_string(field_roles.size()) +
              " entries for field count " + std::to_string(field_count));
  }
  // Only the extension role may repeat; repeated extensions stay separated
  // by their index byte in the field encoders.
  std::set<FieldRole> seen;
  for (FieldRole role : field_roles) {
    if (role != FieldRole::extension && !seen.insert(role).second) {
      raise(errc::duplicate_role,
            "role '" + std::string(role_name(role)) + "' appears twice");
    }
  }

  Params params;
  params.field_count = static_cast<std::uint8_t>(field_count);
  params.field_bytes = kFieldBytesV1;
  params.field_roles = std::move(field_roles);
  params.suite_id = std::string(suite_id);
  params.params_digest = sha256(as_span(serialize_params(params)));
  return params;
}

Bytes serialize_params(const Params& params) {
  ByteWriter w;
  w.raw(ByteSpan(reinterpret_cast<const std::uint8_t*>(kParamsMagic), 4));
  w.u16(kParamsVersion);
  w.u8(params.field_count);
  w.u16(params.field_bytes);
  w.prefixed16(as_span(params.suite_id));
  for (FieldRole role : params.field_roles) {
    w.prefixed16(as_span(role_name(role)));
  }
  return w.take();
}

Params read_params(ByteReader& r) {
  ByteSpan magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kParamsMagic)) {
    r.fail("bad magic");
  }
  if (r.u16() != kParamsVersion) r.fail("unsupported version");

  Params params;
  params.field_count = r.u8();
  params.field_bytes = r.u16();
  Bytes suite = r.prefixed16(64);
  params.suite_id.assign(suite.begin(), suite.end());
  if (params.field_count < kMinFieldCount || params.field_count > kMaxFieldCount) {
    r.fail("field count outside [1, 64]");
  }
  if (params.suite_id != kSuiteV1) r.fail("unsupported suite");
  if (params.field_bytes != kFieldBytesV1) r.fail("unsupported field width");
  for (unsigned i = 0; i < params.field_count; ++i) {
    Bytes tag = r.prefixed16(64);
    auto role = role_from_name(std::string_view(
        reinterpret_cast<const char*>(tag.data()), tag.size()));
    if (!role) r.fail("unknown role tag");
    params.field_roles.push_back(*role);
  }
  params.params_digest = sha256(as_span(serialize_params(params)));
  return params;
}

Params parse_params(ByteSpan data) {
  ByteReader r(data, errc::malformed_input, "params");
  Params params = read_params(r);
  r.expect_done();
  return params;
}

void save_params(const std::filesystem::path& path, const Params& params,
                 bool overwrite) {
  if (!overwrite && std::filesystem::exists(path)) {
    raise(errc::storage_failure,
          "refusing to overwrite existing file " + path.string());
  }
  Bytes data = serialize_params(params);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(errc::storage_failure, "cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out.flush()) raise(errc::storage_failure, "write failed: " + path.string());
}

Params load_params(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::storage_failure, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_params(as_span(data));
}

}  // namespace csev
