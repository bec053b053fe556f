#ifndef BGNLAB_BIG_INT_H_
#define BGNLAB_BIG_INT_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgnlab {

using BigInt = mpz_class;

inline BigInt FromU64(uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Lowercase hex without prefix or leading zeros ("0" for zero). Negative
// values are rejected; every serialized quantity in this library is reduced.
std::string ToHex(const BigInt& v);

// Strict inverse of ToHex: rejects uppercase, leading zeros and signs so that
// parse(serialize(x)) and serialize(parse(s)) are both exact.
BigInt FromHex(std::string_view hex);

// Non-negative residue of v modulo m (m > 0).
BigInt Mod(const BigInt& v, const BigInt& m);

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& mod);
BigInt InvMod(const BigInt& v, const BigInt& mod);

bool IsProbablePrime(const BigInt& v);

size_t BitLength(const BigInt& v);

// Fits in uint64_t; caller must check with FitsU64 first.
bool FitsU64(const BigInt& v);
uint64_t ToU64(const BigInt& v);

// Big-endian unsigned import.
BigInt FromBytes(std::span<const uint8_t> bytes);

}  // namespace bgnlab

#endif  // BGNLAB_BIG_INT_H_
