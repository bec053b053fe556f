#include "bgnlab/big_int.h"

#include "bgnlab/error.h"

namespace bgnlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kParamGeneration:
      return "parameter-generation-failure";
    case ErrorCode::kOffCurve:
      return "off-curve";
    case ErrorCode::kHashExhausted:
      return "hash-exhausted";
    case ErrorCode::kOutOfRange:
      return "out-of-range";
    case ErrorCode::kIncompletePeriod:
      return "incomplete-period";
    case ErrorCode::kEncryptOnce:
      return "encrypt-once-violation";
    case ErrorCode::kLevelMismatch:
      return "level-mismatch";
    case ErrorCode::kQueryDiscipline:
      return "query-discipline";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

std::string ToHex(const BigInt& v) {
  if (sgn(v) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot hex-encode a negative value");
  }
  return v.get_str(16);
}

BigInt FromHex(std::string_view hex) {
  if (hex.empty()) throw Error(ErrorCode::kParse, "empty hex integer");
  if (hex.size() > 1 && hex[0] == '0') {
    throw Error(ErrorCode::kParse, "non-canonical hex integer (leading zero)");
  }
  for (char c : hex) {
    bool digit = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!digit) {
      throw Error(ErrorCode::kParse,
                  "invalid hex digit in '" + std::string(hex) + "'");
    }
  }
  return BigInt(std::string(hex), 16);
}

BigInt Mod(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

BigInt InvMod(const BigInt& v, const BigInt& mod) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "value is not invertible");
  }
  return r;
}

bool IsProbablePrime(const BigInt& v) {
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

size_t BitLength(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

bool FitsU64(const BigInt& v) { return sgn(v) >= 0 && BitLength(v) <= 64; }

uint64_t ToU64(const BigInt& v) {
  if (!FitsU64(v)) throw Error(ErrorCode::kOutOfRange, "value exceeds 64 bits");
  return static_cast<uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

BigInt FromBytes(std::span<const uint8_t> bytes) {
  BigInt r;
  if (!bytes.empty()) {
    mpz_import(r.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return r;
}

}  // namespace bgnlab
