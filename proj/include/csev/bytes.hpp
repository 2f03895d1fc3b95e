#pragma once

// csev/bytes.hpp — byte buffers, hex/base64 codecs, and big-endian
// serialization helpers shared by every wire format in the library.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csev/error.hpp"

namespace csev {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline constexpr std::size_t kDigestBytes = 32;
using Digest = std::array<std::uint8_t, kDigestBytes>;

inline ByteSpan as_span(const Bytes& b) { return ByteSpan(b.data(), b.size()); }
inline ByteSpan as_span(const Digest& d) { return ByteSpan(d.data(), d.size()); }
ByteSpan as_span(std::string_view s);
Bytes to_bytes(std::string_view s);

bool is_zero(const Digest& d);

std::string to_hex(ByteSpan data);
// Strict: accepts only lowercase hex of even length.
std::optional<Bytes> from_hex(std::string_view hex);
std::optional<Digest> digest_from_hex(std::string_view hex);

std::string to_base64(ByteSpan data);
std::optional<Bytes> from_base64(std::string_view text);

// Big-endian append-only encoder.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v);
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void raw(ByteSpan b) { out_.insert(out_.end(), b.begin(), b.end()); }
  // 4-byte big-endian length prefix followed by the bytes.
  void prefixed32(ByteSpan b);
  // 2-byte big-endian length prefix, for the compact params/anchor headers.
  void prefixed16(ByteSpan b);

  const Bytes& bytes() const& { return out_; }
  Bytes take() { return std::move(out_); }
  std::size_t size() const { return out_.size(); }

 private:
  Bytes out_;
};

// Big-endian decoder over a borrowed span. Underflow and bound violations
// throw Error with the code chosen at construction, so each file format
// reports its own failure class.
class ByteReader {
 public:
  ByteReader(ByteSpan data, errc on_error, std::string context)
      : data_(data), on_error_(on_error), context_(std::move(context)) {}

  std::uint8_t u8();
  std::uint16_t u16();
  std::uint32_t u32();
  std::uint64_t u64();
  ByteSpan raw(std::size_t n);
  Digest digest();
  Bytes prefixed32(std::size_t max_len);
  Bytes prefixed16(std::size_t max_len);

  std::size_t remaining() const { return data_.size() - pos_; }
  // Rejects trailing bytes; canonical formats must consume their input fully.
  void expect_done();

  [[noreturn]] void fail(const std::string& what) const;

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
  errc on_error_;
  std::string context_;
};

}  // namespace csev
