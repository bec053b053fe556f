#include "bgnlab/bgn.h"

#include <optional>
#include <utility>

#include "bgnlab/dlog.h"
#include "bgnlab/error.h"

namespace bgnlab {

namespace {

void CheckMessage(uint64_t m, uint64_t bound) {
  if (m >= bound) {
    throw Error(ErrorCode::kOutOfRange, "plaintext " + std::to_string(m) +
                                            " outside [0, " +
                                            std::to_string(bound) + ")");
  }
}

}  // namespace

std::string_view LevelName(CiphertextLevel level) {
  return level == CiphertextLevel::kG ? "G" : "GT";
}

BgnKeyPair BgnKeyGen(GroupPtr group) {
  const GroupParams& params = group->params();
  BgnKeyPair kp{{group, params.g, params.h}, {params.q_sub}};
  return kp;
}

BgnCiphertext BgnEncrypt(const BgnPublicKey& pk, uint64_t m, Rng& rng,
                         uint64_t message_bound) {
  CheckMessage(m, message_bound);
  return BgnEncryptWithNoise(pk, m, rng.Uniform(pk.group->order()),
                             message_bound);
}

BgnCiphertext BgnEncryptWithNoise(const BgnPublicKey& pk, uint64_t m,
                                  const BigInt& r, uint64_t message_bound) {
  CheckMessage(m, message_bound);
  const BilinearGroup& grp = *pk.group;
  return BgnCiphertext(grp.Add(grp.Mul(FromU64(m), pk.g), grp.Mul(r, pk.h)));
}

BgnCiphertext BgnAdd(const BgnPublicKey& pk, const BgnCiphertext& a,
                     const BgnCiphertext& b) {
  if (a.level() != b.level()) {
    throw Error(ErrorCode::kLevelMismatch, "cannot add G and G_T ciphertexts");
  }
  const BilinearGroup& grp = *pk.group;
  if (a.level() == CiphertextLevel::kG) {
    return BgnCiphertext(grp.Add(a.point(), b.point()));
  }
  return BgnCiphertext(grp.GtMul(a.gt(), b.gt()));
}

BgnCiphertext BgnMultiplyOnce(const BgnPublicKey& pk, const BgnCiphertext& a,
                              const BgnCiphertext& b) {
  if (a.level() != CiphertextLevel::kG || b.level() != CiphertextLevel::kG) {
    throw Error(ErrorCode::kLevelMismatch,
                "only level-G ciphertexts can be multiplied");
  }
  return BgnCiphertext(pk.group->Pair(a.point(), b.point()));
}

uint64_t BgnDecrypt(const BgnPublicKey& pk, const BgnSecretKey& sk,
                    const BgnCiphertext& c, uint64_t bound) {
  const BilinearGroup& grp = *pk.group;
  std::optional<uint64_t> m;
  if (c.level() == CiphertextLevel::kG) {
    m = DlogBsgs(grp, grp.Mul(sk.q, pk.g), grp.Mul(sk.q, c.point()), bound);
  } else {
    m = DlogBsgs(grp, grp.GtPow(grp.Pair(pk.g, pk.g), sk.q),
                 grp.GtPow(c.gt(), sk.q), bound);
  }
  if (!m) {
    throw Error(ErrorCode::kOutOfRange,
                "no plaintext below " + std::to_string(bound));
  }
  return *m;
}

std::string SerializeCiphertext(const BgnCiphertext& c) {
  return EncodeElement(c.body());
}

BgnCiphertext ParseCiphertext(std::string_view text) {
  GroupElement e = DecodeElement(text);
  if (auto* p = std::get_if<CurvePoint>(&e)) return BgnCiphertext(std::move(*p));
  return BgnCiphertext(std::move(std::get<GtElement>(e)));
}

}  // namespace bgnlab
