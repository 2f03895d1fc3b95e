#include "csev/bytes.hpp"

#include <sodium.h>

namespace csev {

ByteSpan as_span(std::string_view s) {
  return ByteSpan(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

Bytes to_bytes(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

bool is_zero(const Digest& d) {
  for (auto b : d) {
    if (b != 0) return false;
  }
  return true;
}

std::string to_hex(ByteSpan data) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 0x0f]);
  }
  return out;
}

namespace {

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;  // uppercase is rejected: canonical hex is lowercase
}

}  // namespace

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::optional<Digest> digest_from_hex(std::string_view hex) {
  if (hex.size() != kDigestBytes * 2) return std::nullopt;
  auto bytes = from_hex(hex);
  if (!bytes) return std::nullopt;
  Digest d{};
  std::copy(bytes->begin(), bytes->end(), d.begin());
  return d;
}

std::string to_base64(ByteSpan data) {
  std::string out(sodium_base64_encoded_len(data.size(), sodium_base64_VARIANT_ORIGINAL), '\0');
  sodium_bin2base64(out.data(), out.size(), data.data(), data.size(),
                    sodium_base64_VARIANT_ORIGINAL);
  out.resize(out.find('\0') == std::string::npos ? out.size() : out.find('\0'));
  return out;
}

std::optional<Bytes> from_base64(std::string_view text) {
  Bytes out(text.size(), 0);  // decoded output is always shorter
  std::size_t decoded_len = 0;
  if (sodium_base642bin(out.data(), out.size(), text.data(), text.size(),
                        nullptr, &decoded_len, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0) {
    return std::nullopt;
  }
  out.resize(decoded_len);
  return out;
}

void ByteWriter::u16(std::uint16_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::u32(std::uint32_t v) {
  out_.push_back(static_cast<std::uint8_t>(v >> 24));
  out_.push_back(static_cast<std::uint8_t>(v >> 16));
  out_.push_back(static_cast<std::uint8_t>(v >> 8));
  out_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::prefixed32(ByteSpan b) {
  u32(static_cast<std::uint32_t>(b.size()));
  raw(b);
}

void ByteWriter::prefixed16(ByteSpan b) {
  u16(static_cast<std::uint16_t>(b.size()));
  raw(b);
}

void ByteReader::fail(const std::string& what) const {
  raise(on_error_, context_ + ": " + what);
}

std::uint8_t ByteReader::u8() {
  if (remaining() < 1) fail("unexpected end of input");
  return data_[pos_++];
}

std::uint16_t ByteReader::u16() {
  if (remaining() < 2) fail("unexpected end of input");
  std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::u32() {
  if (remaining() < 4) fail("unexpected end of input");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = v << 8 | data_[pos_ + i];
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::u64() {
  if (remaining() < 8) fail("unexpected end of input");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | data_[pos_ + i];
  pos_ += 8;
  return v;
}

ByteSpan ByteReader::raw(std::size_t n) {
  if (remaining() < n) fail("unexpected end of input");
  ByteSpan out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

Digest ByteReader::digest() {
  ByteSpan b = raw(kDigestBytes);
  Digest d{};
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

Bytes ByteReader::prefixed32(std::size_t max_len) {
  std::uint32_t len = u32();
  if (len > max_len) fail("length prefix exceeds limit");
  ByteSpan b = raw(len);
  return Bytes(b.begin(), b.end());
}

Bytes ByteReader::prefixed16(std::size_t max_len) {
  std::uint16_t len = u16();
  if (len > max_len) fail("length prefix exceeds limit");
  ByteSpan b = raw(len);
  return Bytes(b.begin(), b.end());
}

void ByteReader::expect_done() {
  if (remaining() != 0) fail("trailing bytes after record");
}

}  // namespace csev
