#ifndef BGNLAB_SCHEMES_H_
#define BGNLAB_SCHEMES_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bgnlab/bgn.h"
#include "bgnlab/big_int.h"
#include "bgnlab/codec.h"
#include "bgnlab/group.h"
#include "bgnlab/rng.h"
#include "bgnlab/transcript.h"

namespace bgnlab {

// Blinded aggregation schemes built on Shi et al. style shares s_0..s_n with
// sum s_i = 0 (mod N).
//
//   kShiBase   c_i = e(g,g)^m (H_T(t))^s                over G_T
//   kShiOnG    c_i = g^m H(t)^s                         over G (naive; the
//                                                        pairing breaks it)
//   kFhl14     c_i = g^m (H(t) h^r)^s                   over G
//   kLlwkr19   c_i = g^m h^r f^s                        over G (also ZLC22)
//   kFixedGt   c_i = e(g,g)^m (H_T(t) e(g,h)^r)^s       over G_T
enum class Scheme { kShiBase, kShiOnG, kFhl14, kLlwkr19, kFixedGt };

std::string_view SchemeName(Scheme scheme);
// Accepts "shi-base", "shi-g", "fhl14", "llwkr19" (alias "zlc22"), "fixed-gt".
Scheme ParseScheme(std::string_view name);
std::vector<Scheme> AllSchemes();

// Whether ciphertexts live in G_T (true) or G (false).
bool CarriedInGt(Scheme scheme);
// Whether decryption first raises to the BGN secret q.
bool UsesBgnKey(Scheme scheme);

struct PartySecrets {
  std::vector<BigInt> shares;  // shares[0] = s_0 (aggregator), shares[i] = s_i
  BigInt recipient_sk;         // q_sub

  size_t parties() const { return shares.size() - 1; }
  const BigInt& share(uint32_t i) const { return shares.at(i); }
};

// n uniform shares s_1..s_n in Z_N and s_0 = -sum s_i (mod N). n >= 1.
PartySecrets SetupShares(const BilinearGroup& group, size_t n, Rng& rng);

struct NoisyCiphertext {
  Scheme scheme;
  uint32_t participant = 0;
  std::string period;
  GroupElement body;

  friend bool operator==(const NoisyCiphertext&, const NoisyCiphertext&) = default;
};

TranscriptRecord ToRecord(const NoisyCiphertext& ct);
NoisyCiphertext FromRecord(const TranscriptRecord& record);

// Stateless algorithms of one scheme. Encrypt-once bookkeeping lives in
// PeriodLedger / ProtocolRun.
class NoisyScheme {
 public:
  NoisyScheme(GroupPtr group, Scheme scheme,
              uint64_t message_bound = kDefaultMessageBound);

  Scheme scheme() const { return scheme_; }
  const BilinearGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  uint64_t message_bound() const { return message_bound_; }

  // Throws kOutOfRange unless m < message_bound; participant >= 1.
  NoisyCiphertext Encrypt(uint32_t participant, const BigInt& share,
                          std::string_view period, uint64_t m, Rng& rng) const;

  // Pinned randomness and no range check on m. Used by tests and by the
  // attack demos that deliberately step outside the message bound.
  NoisyCiphertext EncryptWithNoise(uint32_t participant, const BigInt& share,
                                   std::string_view period, const BigInt& m,
                                   const BigInt& r) const;

  // The per-period blinding base: H(t), H_T(t) or f (period independent).
  GroupElement BlindingBase(std::string_view period) const;

  // V = base^{s_0} * prod c_i over exactly the given ciphertexts, with no
  // completeness check (a missing share leaves residual blinding).
  GroupElement Combine(const BigInt& s0, std::string_view period,
                       std::span<const NoisyCiphertext> cts) const;

  // As Combine, but requires exactly one ciphertext from each participant
  // 1..parties for this period; kIncompletePeriod otherwise.
  GroupElement Aggregate(const BigInt& s0, std::string_view period,
                         std::span<const NoisyCiphertext> cts,
                         size_t parties) const;

  // Period sum, or nullopt when no value below bound matches (an incomplete
  // aggregate, or a sum past the bound).
  std::optional<uint64_t> TryDecrypt(const BigInt& recipient_sk,
                                     const GroupElement& aggregate,
                                     uint64_t bound) const;
  // Throws kOutOfRange where TryDecrypt returns nullopt.
  uint64_t Decrypt(const BigInt& recipient_sk, const GroupElement& aggregate,
                   uint64_t bound) const;

 private:
  GroupPtr group_;
  Scheme scheme_;
  uint64_t message_bound_;
};

// Thread-safe encrypt-once and period-completeness bookkeeping for a fixed
// set of participants 1..parties.
class PeriodLedger {
 public:
  explicit PeriodLedger(size_t parties) : parties_(parties) {}

  size_t parties() const { return parties_; }

  // kInvalidArgument for unknown participants, kEncryptOnce on repeats.
  void Record(uint32_t participant, std::string_view period);
  bool Contains(uint32_t participant, std::string_view period) const;
  // kIncompletePeriod naming the missing participants.
  void RequireComplete(std::string_view period) const;

 private:
  size_t parties_;
  mutable std::mutex mu_;
  std::map<std::string, std::set<uint32_t>, std::less<>> seen_;
};

// One protocol deployment: a trusted dealer's shares, the participants'
// submissions, the aggregator (holds s_0) and the recipient (holds q).
class ProtocolRun {
 public:
  ProtocolRun(NoisyScheme scheme, PartySecrets secrets);

  const NoisyScheme& scheme() const { return scheme_; }
  const PartySecrets& secrets() const { return secrets_; }

  // Participant i encrypts m for period t; enforces encrypt-once.
  NoisyCiphertext Submit(uint32_t participant, std::string_view period,
                         uint64_t m, Rng& rng);

  // Aggregator role. kIncompletePeriod unless every participant submitted.
  GroupElement AggregatePeriod(std::string_view period) const;

  // Recipient role.
  uint64_t DecryptAggregate(const GroupElement& aggregate, uint64_t bound) const;

  Transcript transcript() const;

 private:
  NoisyScheme scheme_;
  PartySecrets secrets_;
  PeriodLedger ledger_;
  mutable std::mutex mu_;
  Transcript transcript_;
};

// Wang's identity-based additively homomorphic scheme. W = e(H(ID), g^x) is
// the encryption key and d = H(ID)^x the decryptor's key.
struct WangKeys {
  BigInt master_secret;
  std::string identity;
  GtElement encryption_key;    // W
  CurvePoint decryption_key;   // d
};

struct WangCiphertext {
  CurvePoint x;   // g^r
  GtElement y;    // e(g,g)^m W^r

  friend bool operator==(const WangCiphertext&, const WangCiphertext&) = default;
};

WangKeys WangKeyGen(const BilinearGroup& group, std::string_view identity,
                    Rng& rng);
WangCiphertext WangEncrypt(const BilinearGroup& group, const GtElement& w,
                           uint64_t m, Rng& rng,
                           uint64_t message_bound = kDefaultMessageBound);
WangCiphertext WangEncryptWithNoise(const BilinearGroup& group,
                                    const GtElement& w, uint64_t m,
                                    const BigInt& r);
// Component-wise product.
WangCiphertext WangAggregate(const BilinearGroup& group,
                             std::span<const WangCiphertext> cts);
// log_{e(g,g)} (Y / e(d, X)); kOutOfRange when no value below bound matches.
uint64_t WangDecryptSum(const BilinearGroup& group, const CurvePoint& d,
                        const WangCiphertext& aggregate, uint64_t bound);

std::string SerializeWangCiphertext(const WangCiphertext& ct);
WangCiphertext ParseWangCiphertext(std::string_view text);

// Collector-side bookkeeping for Wang's protocol.
class WangRun {
 public:
  WangRun(GroupPtr group, WangKeys keys, size_t parties,
          uint64_t message_bound = kDefaultMessageBound);

  WangCiphertext Submit(uint32_t participant, std::string_view period,
                        uint64_t m, Rng& rng);
  // kIncompletePeriod unless every participant submitted.
  WangCiphertext AggregatePeriod(std::string_view period) const;
  uint64_t DecryptAggregate(const WangCiphertext& aggregate, uint64_t bound) const;

  const WangKeys& keys() const { return keys_; }

 private:
  GroupPtr group_;
  WangKeys keys_;
  uint64_t message_bound_;
  PeriodLedger ledger_;
  mutable std::mutex mu_;
  std::map<std::string, std::vector<WangCiphertext>, std::less<>> submitted_;
};

}  // namespace bgnlab

#endif  // BGNLAB_SCHEMES_H_
