#include "bgnlab/rng.h"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <string>
#include <vector>

#include "bgnlab/error.h"

namespace bgnlab {

namespace {

Digest DeriveKey(const Digest& parent, std::string_view tag,
                 std::span<const uint8_t> extra) {
  std::vector<uint8_t> buf(parent.begin(), parent.end());
  buf.insert(buf.end(), tag.begin(), tag.end());
  buf.insert(buf.end(), extra.begin(), extra.end());
  return Sha256(buf);
}

}  // namespace

Rng::Rng(std::string_view seed)
    : key_(Sha256(std::string("bgnlab.rng.v1|") + std::string(seed))) {}

Rng::Rng(const Digest& key) : key_(key) {}

Rng Rng::Fork(std::string_view label) const {
  return Rng(DeriveKey(key_, "fork-label|",
                       std::span<const uint8_t>(
                           reinterpret_cast<const uint8_t*>(label.data()),
                           label.size())));
}

Rng Rng::Fork(uint64_t index) const {
  std::array<uint8_t, 8> be;
  for (int i = 0; i < 8; ++i) be[i] = static_cast<uint8_t>(index >> (56 - 8 * i));
  return Rng(DeriveKey(key_, "fork-index|", be));
}

void Rng::Refill() {
  internal::EnsureSodium();
  static constexpr std::array<uint8_t, crypto_stream_chacha20_NONCEBYTES> kNonce{};
  static_assert(crypto_stream_chacha20_KEYBYTES == std::tuple_size_v<Digest>);
  buffer_.fill(0);
  crypto_stream_chacha20_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(),
                                kNonce.data(), block_, key_.data());
  block_ += buffer_.size() / 64;
  offset_ = 0;
}

void Rng::Fill(std::span<uint8_t> out) {
  size_t written = 0;
  while (written < out.size()) {
    if (offset_ == buffer_.size()) Refill();
    size_t n = std::min(out.size() - written, buffer_.size() - offset_);
    std::memcpy(out.data() + written, buffer_.data() + offset_, n);
    offset_ += n;
    written += n;
  }
}

uint64_t Rng::NextU64() {
  std::array<uint8_t, 8> b;
  Fill(b);
  uint64_t v = 0;
  for (uint8_t x : b) v = (v << 8) | x;
  return v;
}

uint64_t Rng::UniformU64(uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  // Rejection sampling on the largest multiple of bound.
  const uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    uint64_t v = NextU64();
    if (v <= limit) return v % bound;
  }
}

BigInt Rng::Uniform(const BigInt& bound) {
  if (sgn(bound) <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  }
  const size_t bits = BitLength(bound);
  const size_t nbytes = (bits + 7) / 8;
  const uint8_t top_mask =
      static_cast<uint8_t>(bits % 8 == 0 ? 0xff : (1u << (bits % 8)) - 1);
  std::vector<uint8_t> buf(nbytes);
  for (;;) {
    Fill(buf);
    buf[0] &= top_mask;
    BigInt v = FromBytes(buf);
    if (v < bound) return v;
  }
}

bool Rng::Coin() {
  uint8_t b;
  Fill(std::span<uint8_t>(&b, 1));
  return (b & 1) != 0;
}

}  // namespace bgnlab
