#ifndef BGNLAB_HASH_H_
#define BGNLAB_HASH_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace bgnlab {

using Digest = std::array<uint8_t, 32>;

Digest Sha256(std::span<const uint8_t> data);
Digest Sha256(std::string_view data);

std::string BytesToHex(std::span<const uint8_t> bytes);

// Hex SHA-256 of a string; used for params and transcript digests.
std::string HexSha256(std::string_view data);

namespace internal {
void EnsureSodium();
}  // namespace internal

}  // namespace bgnlab

#endif  // BGNLAB_HASH_H_
