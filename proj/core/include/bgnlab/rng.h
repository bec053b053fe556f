#ifndef BGNLAB_RNG_H_
#define BGNLAB_RNG_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "bgnlab/big_int.h"
#include "bgnlab/hash.h"

namespace bgnlab {

// Deterministic ChaCha20 keystream keyed by SHA-256 of a seed. All sampling in
// the library goes through an explicitly passed Rng, so every run replays
// exactly from its seed. Not thread-safe; fork one stream per thread/trial.
class Rng {
 public:
  explicit Rng(std::string_view seed);

  // Independent child streams. Fork(i) for trial i, Fork("role") for roles.
  Rng Fork(std::string_view label) const;
  Rng Fork(uint64_t index) const;

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();

  // Uniform in [0, bound); bound > 0.
  uint64_t UniformU64(uint64_t bound);
  BigInt Uniform(const BigInt& bound);

  bool Coin();

 private:
  explicit Rng(const Digest& key);
  void Refill();

  Digest key_;
  uint64_t block_ = 0;
  std::array<uint8_t, 256> buffer_{};
  size_t offset_ = buffer_.size();
};

}  // namespace bgnlab

#endif  // BGNLAB_RNG_H_
