#ifndef BGNLAB_BGN_H_
#define BGNLAB_BGN_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "bgnlab/big_int.h"
#include "bgnlab/codec.h"
#include "bgnlab/group.h"
#include "bgnlab/rng.h"

namespace bgnlab {

// Plaintexts must be small enough that the decryptor can take the discrete
// log; this is the default range for both encryption and decryption.
inline constexpr uint64_t kDefaultMessageBound = uint64_t{1} << 16;

enum class CiphertextLevel { kG, kGt };

std::string_view LevelName(CiphertextLevel level);

struct BgnPublicKey {
  GroupPtr group;
  CurvePoint g;  // order N
  CurvePoint h;  // order q
};

struct BgnSecretKey {
  BigInt q;
};

struct BgnKeyPair {
  BgnPublicKey pk;
  BgnSecretKey sk;
};

// C = g^m h^r in G, or after one multiplication an element of G_T.
class BgnCiphertext {
 public:
  explicit BgnCiphertext(CurvePoint c) : body_(std::move(c)) {}
  explicit BgnCiphertext(GtElement c) : body_(std::move(c)) {}

  CiphertextLevel level() const {
    return IsGt(body_) ? CiphertextLevel::kGt : CiphertextLevel::kG;
  }
  const GroupElement& body() const { return body_; }
  const CurvePoint& point() const { return std::get<CurvePoint>(body_); }
  const GtElement& gt() const { return std::get<GtElement>(body_); }

  friend bool operator==(const BgnCiphertext&, const BgnCiphertext&) = default;

 private:
  GroupElement body_;
};

// pk = (g, h = [p]u), sk = q.
BgnKeyPair BgnKeyGen(GroupPtr group);

// r uniform in Z_N. Throws kOutOfRange unless 0 <= m < message_bound.
BgnCiphertext BgnEncrypt(const BgnPublicKey& pk, uint64_t m, Rng& rng,
                         uint64_t message_bound = kDefaultMessageBound);

// Same as BgnEncrypt with the randomness pinned; for tests and sweeps.
BgnCiphertext BgnEncryptWithNoise(const BgnPublicKey& pk, uint64_t m,
                                  const BigInt& r,
                                  uint64_t message_bound = kDefaultMessageBound);

// Homomorphic addition; both operands must be at the same level
// (kLevelMismatch otherwise).
BgnCiphertext BgnAdd(const BgnPublicKey& pk, const BgnCiphertext& a,
                     const BgnCiphertext& b);

// e(c1, c2): encrypts m1 * m2 in G_T under e(g, g) with blinding in the
// order-q subgroup of G_T. Both inputs must be level G.
BgnCiphertext BgnMultiplyOnce(const BgnPublicKey& pk, const BgnCiphertext& a,
                              const BgnCiphertext& b);

// m = log_{g^q} C^q (or base e(g,g)^q for level G_T). Throws kOutOfRange
// when no m in [0, bound) exists.
uint64_t BgnDecrypt(const BgnPublicKey& pk, const BgnSecretKey& sk,
                    const BgnCiphertext& c,
                    uint64_t bound = kDefaultMessageBound);

// "G <x> <y>" / "G inf" / "GT <re> <im>".
std::string SerializeCiphertext(const BgnCiphertext& c);
BgnCiphertext ParseCiphertext(std::string_view text);

}  // namespace bgnlab

#endif  // BGNLAB_BGN_H_
